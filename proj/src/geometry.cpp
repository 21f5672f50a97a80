#include "pmclp/geometry.hpp"

#include <algorithm>

namespace pmclp {

double area(const Rect& r) { return r.w * r.l; }

std::optional<Rect> intersect(const Rect& a, const Rect& b) {
  const double x0 = std::max(a.x, b.x);
  const double x1 = std::min(a.right(), b.right());
  if (x1 <= x0) return std::nullopt;
  const double y0 = std::max(a.y, b.y);
  const double y1 = std::min(a.top(), b.top());
  if (y1 <= y0) return std::nullopt;
  return Rect{x0, y0, x1 - x0, y1 - y0};
}

double overlap_area(const Rect& a, const Rect& b) {
  const double dx = std::min(a.right(), b.right()) - std::max(a.x, b.x);
  if (dx <= 0.0) return 0.0;
  const double dy = std::min(a.top(), b.top()) - std::max(a.y, b.y);
  if (dy <= 0.0) return 0.0;
  return dx * dy;
}

bool trim_out_into(const Rect& d, const Rect& s, std::vector<Rect>& out) {
  const double ix0 = std::max(d.x, s.x);
  const double ix1 = std::min(d.right(), s.right());
  if (ix1 <= ix0) return false;
  const double iy0 = std::max(d.y, s.y);
  const double iy1 = std::min(d.top(), s.top());
  if (iy1 <= iy0) return false;

  const double dx0 = d.x, dx1 = d.right();
  const double dy0 = d.y, dy1 = d.top();
  auto emit = [&out](double x0, double x1, double y0, double y1) {
    if (x1 > x0 && y1 > y0) out.push_back(Rect{x0, y0, x1 - x0, y1 - y0});
  };
  emit(dx0, dx1, dy0, iy0);  // bottom
  emit(dx0, dx1, iy1, dy1);  // top
  emit(dx0, ix0, iy0, iy1);  // left
  emit(ix1, dx1, iy0, iy1);  // right
  return true;
}

std::vector<Rect> trim_out(const Rect& d, const Rect& s) {
  std::vector<Rect> pieces;
  if (!trim_out_into(d, s, pieces)) pieces.push_back(d);
  return pieces;
}

}  // namespace pmclp
