#pragma once

#include <optional>
#include <vector>

namespace pmclp {

// Absolute tolerance used for every coordinate and reward comparison.
inline constexpr double kEpsilon = 1e-9;

// Axis-parallel rectangle given by its lower-left corner, width (x-extent)
// and length (y-extent).
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double l = 0.0;

  double right() const { return x + w; }
  double top() const { return y + l; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

double area(const Rect& r);

// Largest rectangle contained in both `a` and `b`. Rectangles that only touch
// along an edge or a corner have no intersection.
std::optional<Rect> intersect(const Rect& a, const Rect& b);

// Area of a ∩ b without materializing the rectangle.
double overlap_area(const Rect& a, const Rect& b);

// Decomposes d \ s into at most four pairwise-disjoint rectangles, in the
// fixed order: full-width bottom strip, full-width top strip, then the left
// and right strips between them. Zero-area pieces are dropped.
std::vector<Rect> trim_out(const Rect& d, const Rect& s);

// Appends the pieces of trim_out(d, s) to `out`; returns false when d and s
// do not overlap (in which case nothing is appended).
bool trim_out_into(const Rect& d, const Rect& s, std::vector<Rect>& out);

}  // namespace pmclp
