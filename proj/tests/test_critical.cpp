#include <doctest.h>

#include <random>

#include "pmclp/critical.hpp"

using namespace pmclp;

namespace {
bool same(const DcvQuad& q, double o1, double i1, double i2, double o2) {
  return q.o1 == o1 && q.i1 == i1 && q.i2 == i2 && q.o2 == o2;
}
}  // namespace

TEST_CASE("dcvs") {
  CHECK(same(dcvs({{10, 0, 5, 1}, 1}, 1, {3, 1}, Axis::kX), 7, 10, 12, 15));
  CHECK(same(dcvs({{0, 0, 4, 4}, 1}, 2, {2, 2}, Axis::kX), -4, 0, 0, 4));
  CHECK(same(dcvs({{0, 3, 1, 2}, 1}, 1, {1, 1}, Axis::kY), 2, 3, 4, 5));
}

TEST_CASE("idcv_grid") {
  const std::vector<DemandZone> one{{{0, 0, 4, 4}, 1}};
  CHECK(idcv_grid(one, 1, {2, 2}, Axis::kX).values == std::vector<double>{0, 2});
  CHECK(idcv_grid(one, 2, {2, 2}, Axis::kX).values == std::vector<double>{0});
  const std::vector<DemandZone> two{{{0, 0, 4, 1}, 1}, {{3, 0, 4, 1}, 1}};
  CHECK(idcv_grid(two, 1, {2, 2}, Axis::kX).values == std::vector<double>{0, 2, 3, 5});
  CHECK(idcv_grid({}, 1, {2, 2}, Axis::kX).empty());
}

TEST_CASE("oscvs") {
  const FixedZone a{{5, 0, 2}, 2};
  CHECK(oscvs(std::vector<FixedZone>{a}, 1, {3, 1}, Axis::kX).values ==
        std::vector<double>{2, 11});
  const FixedZone b{{0, 0, 1}, 1};
  CHECK(oscvs(std::vector<FixedZone>{b}, 1, {2, 1}, Axis::kX).values ==
        std::vector<double>{-2, 2});
  const FixedZone c{{2, 0, 1}, 1};
  CHECK(oscvs(std::vector<FixedZone>{b, c}, 1, {2, 1}, Axis::kX).values ==
        std::vector<double>{-2, 0, 2, 4});
  CHECK(oscvs({}, 1, {2, 1}, Axis::kX).empty());
}

TEST_CASE("iscvs") {
  const FixedZone a{{5, 0, 2}, 2};
  // left edges aligned, right edges aligned
  CHECK(iscvs(std::vector<FixedZone>{a}, 1, {3, 1}, Axis::kX).values ==
        std::vector<double>{5, 8});
}

TEST_CASE("dcv ordering and translation") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> c(-50, 50), s(0.5, 20), zs(1, 4);
  for (int i = 0; i < 300; ++i) {
    const DemandZone d{{c(rng), c(rng), s(rng), s(rng)}, 1};
    const BaseServiceZone base{s(rng), s(rng)};
    const double z = zs(rng);
    for (Axis axis : {Axis::kX, Axis::kY}) {
      const DcvQuad q = dcvs(d, z, base, axis);
      CHECK(q.o1 < q.i1);
      CHECK(q.i1 <= q.o2);
      CHECK(q.o1 <= q.i2);
      CHECK(q.i2 < q.o2);
      const double len = axis == Axis::kX ? d.rect.w : d.rect.l;
      const double b = axis == Axis::kX ? base.w0 : base.l0;
      CHECK((q.i1 <= q.i2) == (len >= b * z));
      DemandZone moved = d;
      (axis == Axis::kX ? moved.rect.x : moved.rect.y) += 7.25;
      const DcvQuad m = dcvs(moved, z, base, axis);
      CHECK(m.o1 == doctest::Approx(q.o1 + 7.25));
      CHECK(m.i2 == doctest::Approx(q.i2 + 7.25));
    }
  }
}

TEST_CASE("sort_dedup keeps the smaller of close values") {
  std::vector<double> v{3, 1, 1 + 1e-12, 2, 3};
  sort_dedup(v);
  CHECK(v == std::vector<double>{1, 2, 3});
  CHECK(contains_near(v, 2 + 1e-12));
  CHECK_FALSE(contains_near(v, 2.5));
}
