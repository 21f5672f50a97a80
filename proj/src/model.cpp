#include "pmclp/model.hpp"

#include <algorithm>
#include <cmath>

namespace pmclp {

double eta_value(Eta eta, double z) {
  switch (eta) {
    case Eta::kLinear:
      return z;
  }
  return z;
}

QosSet::QosSet(std::vector<double> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ModelError("QoS set must be nonempty");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!std::isfinite(factors_[i]) || factors_[i] < 1.0)
      throw ModelError("QoS scaling factors must be finite and >= 1");
    if (i > 0 && factors_[i] <= factors_[i - 1])
      throw ModelError("QoS scaling factors must be strictly increasing");
  }
}

bool QosSet::contains(double z) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [z](double f) { return std::abs(f - z) <= kEpsilon; });
}

const QosSet& Instance::qos_for(int j) const {
  if (const auto* shared = std::get_if<QosSet>(&qos)) return *shared;
  return std::get<std::vector<QosSet>>(qos).at(static_cast<std::size_t>(j));
}

void Instance::validate() const {
  if (p < 1) throw ModelError("p must be >= 1");
  const bool one_d = dimension == Dimension::kOneD;
  if (!(base.w0 > 0.0) || !std::isfinite(base.w0))
    throw ModelError("base_sz.w must be positive");
  if (one_d ? base.l0 != 0.0 : !(base.l0 > 0.0) || !std::isfinite(base.l0))
    throw ModelError(one_d ? "base_sz.l must be 0 for 1d instances"
                           : "base_sz.l must be positive");

  if (const auto* per_sz = std::get_if<std::vector<QosSet>>(&qos)) {
    if (per_sz->size() != static_cast<std::size_t>(p))
      throw ModelError("qos.per_sz must list exactly p sets");
  }
  for (int j = 0; j < p; ++j) {
    const QosSet& set = qos_for(j);
    if (set.size() == 0) throw ModelError("QoS set must be nonempty");
    if (one_d && set.size() != 1)
      throw ModelError("1d instances need exactly one scale per service zone");
  }

  for (std::size_t i = 0; i < dzs.size(); ++i) {
    const DemandZone& d = dzs[i];
    const std::string where = "dzs[" + std::to_string(i) + "]: ";
    const Rect& r = d.rect;
    if (!std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.w) ||
        !std::isfinite(r.l) || !std::isfinite(d.v))
      throw ModelError(where + "values must be finite");
    if (!(d.v > 0.0)) throw ModelError(where + "v must be positive");
    if (!(r.w > 0.0)) throw ModelError(where + "w must be positive");
    if (one_d) {
      if (r.l != 0.0 || r.y != 0.0)
        throw ModelError(where + "1d demand zones need y = 0 and l = 0");
    } else if (!(r.l > 0.0)) {
      throw ModelError(where + "l must be positive");
    }
  }
}

double rate(double v, double z, Eta eta) { return v / eta_value(eta, z); }

Rect sz_rect(const BaseServiceZone& base, const Placement& pl) {
  return Rect{pl.x, pl.y, pl.z * base.w0, pl.z * base.l0};
}

}  // namespace pmclp
