#pragma once

#include <span>
#include <vector>

#include "pmclp/model.hpp"

namespace pmclp {

enum class CriticalKind { kInnerDcv, kOuterDcv, kInnerScv, kOuterScv };

// Sorted, epsilon-deduplicated candidate coordinates along one axis.
struct CriticalValueSet {
  std::vector<double> values;
  Axis axis = Axis::kX;
  CriticalKind kind = CriticalKind::kInnerDcv;
  double scale = 1.0;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  double operator[](std::size_t i) const { return values[i]; }
};

// The four demand critical values of one demand zone along `axis`:
// outer O1, inner I1, inner I2, outer O2.
struct DcvQuad {
  double o1 = 0.0;
  double i1 = 0.0;
  double i2 = 0.0;
  double o2 = 0.0;
};

DcvQuad dcvs(const DemandZone& d, double z, const BaseServiceZone& base,
             Axis axis);

// Union of inner demand critical values over all zones for scale z.
CriticalValueSet idcv_grid(std::span<const DemandZone> dzs, double z,
                           const BaseServiceZone& base, Axis axis);

// A service zone whose position along the axis of interest is already fixed.
struct FixedZone {
  Placement placement;
  double scale = 1.0;  // z of the fixed zone
};

// Outer service critical values generated by `fixed` for a zone of scale z.
CriticalValueSet oscvs(std::span<const FixedZone> fixed, double z,
                       const BaseServiceZone& base, Axis axis);

// Inner service critical values generated by `fixed` for a zone of scale z.
// Only used to reproduce the unreduced (all-SCV) search space.
CriticalValueSet iscvs(std::span<const FixedZone> fixed, double z,
                       const BaseServiceZone& base, Axis axis);

// Sorts and merges values closer than `eps`, keeping the smaller one.
void sort_dedup(std::vector<double>& values, double eps = kEpsilon);

// True when `sorted` holds a value within `eps` of `v`.
bool contains_near(std::span<const double> sorted, double v,
                   double eps = kEpsilon);

}  // namespace pmclp
