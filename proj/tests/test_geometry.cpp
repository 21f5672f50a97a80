#include <doctest.h>

#include <random>

#include "pmclp/geometry.hpp"

using namespace pmclp;

TEST_CASE("intersect") {
  CHECK(intersect({0, 0, 4, 4}, {2, 2, 4, 4}) == Rect{2, 2, 2, 2});
  CHECK_FALSE(intersect({0, 0, 4, 4}, {4, 0, 2, 2}).has_value());
  CHECK(intersect({0, 0, 4, 4}, {1, 1, 2, 2}) == Rect{1, 1, 2, 2});
  CHECK_FALSE(intersect({0, 0, 1, 1}, {1, 1, 1, 1}).has_value());
}

TEST_CASE("area") {
  CHECK(area({0, 0, 4, 4}) == 16);
  CHECK(area({5, 5, 0, 7}) == 0);
  CHECK(area({-2, -2, 3, 1.5}) == 4.5);
}

TEST_CASE("trim_out follows the strip order") {
  CHECK(trim_out({0, 0, 4, 4}, {2, 2, 4, 4}) ==
        std::vector<Rect>{{0, 0, 4, 2}, {0, 2, 2, 2}});
  CHECK(trim_out({0, 0, 4, 4}, {10, 10, 1, 1}) == std::vector<Rect>{{0, 0, 4, 4}});
  CHECK(trim_out({0, 0, 4, 4}, {-1, -1, 6, 6}).empty());
  // hole in the middle: bottom, top, left, right
  CHECK(trim_out({0, 0, 6, 6}, {2, 2, 2, 2}) ==
        std::vector<Rect>{{0, 0, 6, 2}, {0, 4, 6, 2}, {0, 2, 2, 2}, {4, 2, 2, 2}});
}

TEST_CASE("trim_out_into reports overlap") {
  std::vector<Rect> out;
  CHECK_FALSE(trim_out_into({0, 0, 1, 1}, {3, 3, 1, 1}, out));
  CHECK(out.empty());
  CHECK(trim_out_into({0, 0, 2, 2}, {1, 0, 5, 5}, out));
  CHECK(out == std::vector<Rect>{{0, 0, 1, 2}});
}

TEST_CASE("intersection is symmetric and overlap_area agrees") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> c(-5, 5), s(0, 4);
  for (int i = 0; i < 500; ++i) {
    const Rect a{c(rng), c(rng), s(rng), s(rng)};
    const Rect b{c(rng), c(rng), s(rng), s(rng)};
    const auto ab = intersect(a, b), ba = intersect(b, a);
    REQUIRE(ab.has_value() == ba.has_value());
    const double ar = ab ? area(*ab) : 0.0;
    CHECK(ar == doctest::Approx(ba ? area(*ba) : 0.0).epsilon(1e-12));
    CHECK(overlap_area(a, b) == doctest::Approx(ar).epsilon(1e-12));
  }
}
