#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pmclp/geometry.hpp"

namespace pmclp {

// Raised when instance data violates a model invariant.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Dimension { kTwoD, kOneD };
enum class Axis { kX, kY };

// Rate decay applied to a scaled service zone. Only the linear form
// eta(z) = z is supported.
enum class Eta { kLinear };

double eta_value(Eta eta, double z);

struct DemandZone {
  Rect rect;
  double v = 1.0;  // base reward rate per unit area

  friend bool operator==(const DemandZone&, const DemandZone&) = default;
};

struct BaseServiceZone {
  double w0 = 0.0;
  double l0 = 0.0;

  friend bool operator==(const BaseServiceZone&, const BaseServiceZone&) =
      default;
};

// Strictly increasing, nonempty list of scaling factors, each >= 1.
class QosSet {
 public:
  QosSet() = default;
  explicit QosSet(std::vector<double> factors);

  std::span<const double> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  double min() const { return factors_.front(); }
  double operator[](std::size_t i) const { return factors_[i]; }
  bool contains(double z) const;

  friend bool operator==(const QosSet&, const QosSet&) = default;

 private:
  std::vector<double> factors_;
};

// Either one set shared by all service zones or one set per service zone.
using QosAssignment = std::variant<QosSet, std::vector<QosSet>>;

struct Placement {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Solution {
  std::vector<Placement> placements;
  double reward = 0.0;
};

struct Instance {
  std::vector<DemandZone> dzs;
  BaseServiceZone base;
  int p = 1;
  QosAssignment qos = QosSet({1.0});
  Eta eta = Eta::kLinear;
  Dimension dimension = Dimension::kTwoD;

  bool shared_qos() const { return std::holds_alternative<QosSet>(qos); }
  const QosSet& qos_for(int j) const;
  // Throws ModelError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Parameters every reward evaluation needs besides the demand zones.
struct Coverage {
  BaseServiceZone base;
  Eta eta = Eta::kLinear;
  Dimension dimension = Dimension::kTwoD;

  static Coverage of(const Instance& instance) {
    return {instance.base, instance.eta, instance.dimension};
  }
};

// v / eta(z).
double rate(double v, double z, Eta eta);

// Footprint of a service zone placed at `pl`.
Rect sz_rect(const BaseServiceZone& base, const Placement& pl);

}  // namespace pmclp
