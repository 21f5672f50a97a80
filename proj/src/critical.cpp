#include "pmclp/critical.hpp"

#include <algorithm>
#include <cmath>

namespace pmclp {
namespace {

double lower(const Rect& r, Axis axis) { return axis == Axis::kX ? r.x : r.y; }
double extent(const Rect& r, Axis axis) {
  return axis == Axis::kX ? r.w : r.l;
}
double base_extent(const BaseServiceZone& base, Axis axis) {
  return axis == Axis::kX ? base.w0 : base.l0;
}
double coord(const Placement& pl, Axis axis) {
  return axis == Axis::kX ? pl.x : pl.y;
}

}  // namespace

void sort_dedup(std::vector<double>& values, double eps) {
  std::sort(values.begin(), values.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (out > 0 && values[i] - values[out - 1] <= eps) continue;
    values[out++] = values[i];
  }
  values.resize(out);
}

bool contains_near(std::span<const double> sorted, double v, double eps) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v - eps);
  return it != sorted.end() && *it <= v + eps;
}

DcvQuad dcvs(const DemandZone& d, double z, const BaseServiceZone& base,
             Axis axis) {
  const double lo = lower(d.rect, axis);
  const double len = extent(d.rect, axis);
  const double sz = base_extent(base, axis) * z;
  return {lo - sz, lo, lo + len - sz, lo + len};
}

CriticalValueSet idcv_grid(std::span<const DemandZone> dzs, double z,
                           const BaseServiceZone& base, Axis axis) {
  CriticalValueSet set{{}, axis, CriticalKind::kInnerDcv, z};
  set.values.reserve(2 * dzs.size());
  for (const DemandZone& d : dzs) {
    const DcvQuad q = dcvs(d, z, base, axis);
    set.values.push_back(q.i1);
    set.values.push_back(q.i2);
  }
  sort_dedup(set.values);
  return set;
}

CriticalValueSet oscvs(std::span<const FixedZone> fixed, double z,
                       const BaseServiceZone& base, Axis axis) {
  CriticalValueSet set{{}, axis, CriticalKind::kOuterScv, z};
  const double b = base_extent(base, axis);
  for (const FixedZone& f : fixed) {
    const double c = coord(f.placement, axis);
    set.values.push_back(c - b * z);
    set.values.push_back(c + b * f.scale);
  }
  sort_dedup(set.values);
  return set;
}

CriticalValueSet iscvs(std::span<const FixedZone> fixed, double z,
                       const BaseServiceZone& base, Axis axis) {
  CriticalValueSet set{{}, axis, CriticalKind::kInnerScv, z};
  const double b = base_extent(base, axis);
  for (const FixedZone& f : fixed) {
    const double c = coord(f.placement, axis);
    set.values.push_back(c);
    set.values.push_back(c + b * f.scale - b * z);
  }
  sort_dedup(set.values);
  return set;
}

}  // namespace pmclp
