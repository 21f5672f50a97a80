#include "pmclp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "pmclp/reward.hpp"

namespace pmclp {
namespace {

using Tuple = std::vector<double>;

void dedup(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > kEpsilon) out.push_back(x);
  v = std::move(out);
}

// Lower-left corner positions where a zone edge meets a demand edge on the
// inside: left/bottom aligned, or right/top aligned.
std::vector<double> inner_values(const Instance& inst, double z, Axis axis) {
  std::vector<double> out;
  const double base = axis == Axis::kX ? inst.base.w0 : inst.base.l0;
  for (const DemandZone& d : inst.dzs) {
    const double lo = axis == Axis::kX ? d.rect.x : d.rect.y;
    const double len = axis == Axis::kX ? d.rect.w : d.rect.l;
    out.push_back(lo);
    out.push_back(lo + len - base * z);
  }
  dedup(out);
  return out;
}

double factorial(int p) {
  double f = 1.0;
  for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

// Generous count of the tuples enumerated along one axis.
double tuple_estimate(std::size_t grid, int p, bool all_perms) {
  double t = all_perms ? factorial(p) : 1.0;
  for (int k = 0; k < p; ++k) t *= static_cast<double>(grid) + 2.0 * k;
  return t;
}

// All coordinate tuples reachable along one axis: zones placed in sequence
// order, the first on an inner value of its scale, later ones also next to
// any zone already placed.
std::set<Tuple> axis_tuples(const Instance& inst, const std::vector<double>& z,
                            Axis axis, bool all_perms) {
  const int p = inst.p;
  const double base = axis == Axis::kX ? inst.base.w0 : inst.base.l0;
  std::vector<std::vector<double>> grids;
  for (int j = 0; j < p; ++j) grids.push_back(inner_values(inst, z[j], axis));

  std::set<Tuple> tuples;
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  Tuple current(p, 0.0);
  std::vector<bool> placed(p, false);

  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == p) {
      tuples.insert(current);
      return;
    }
    const int j = order[depth];
    std::vector<double> cand = grids[j];
    for (int k = 0; k < p; ++k) {
      if (!placed[k]) continue;
      cand.push_back(current[k] - base * z[j]);
      cand.push_back(current[k] + base * z[k]);
    }
    dedup(cand);
    placed[j] = true;
    for (double c : cand) {
      current[j] = c;
      self(self, depth + 1);
    }
    placed[j] = false;
  };

  do {
    recurse(recurse, 0);
  } while (all_perms && std::next_permutation(order.begin(), order.end()));
  return tuples;
}

void consider(OracleResult& best, const Instance& inst, const Coverage& cov,
              std::vector<Placement>& pls) {
  const double r = covered_reward(inst.dzs, pls, cov);
  ++best.evaluations;
  if (best.placements.empty() || r > best.reward + kEpsilon) {
    best.reward = r;
    best.placements = pls;
  }
}

OracleResult empty_result(const Instance& inst) {
  OracleResult r;
  for (int j = 0; j < inst.p; ++j) r.placements.push_back({0.0, 0.0, inst.qos_for(j).min()});
  return r;
}

void guard(double estimate, const OracleOptions& options) {
  if (estimate > options.max_evaluations)
    throw OracleSizeError("instance too large for the brute-force oracle (about " +
                          std::to_string(static_cast<long double>(estimate)) +
                          " evaluations)");
}

}  // namespace

OracleResult brute_force_2d(const Instance& inst, const OracleOptions& options) {
  inst.validate();
  if (inst.dimension != Dimension::kTwoD)
    throw std::invalid_argument("brute_force_2d expects a 2D instance");
  if (inst.dzs.empty()) return empty_result(inst);
  const Coverage cov = Coverage::of(inst);
  const int p = inst.p;

  // z assignments as mixed-radix counters over each zone's scale set.
  std::vector<std::size_t> radix;
  double assignments = 1.0;
  for (int j = 0; j < p; ++j) {
    radix.push_back(inst.qos_for(j).size());
    assignments *= static_cast<double>(radix.back());
  }
  const std::size_t grid = 2 * inst.dzs.size();
  const double per_axis = tuple_estimate(grid, p, options.all_permutations);
  guard(assignments * per_axis * per_axis, options);

  OracleResult best;
  std::vector<std::size_t> digit(p, 0);
  std::vector<Placement> pls(p);
  while (true) {
    std::vector<double> z(p);
    for (int j = 0; j < p; ++j) z[j] = inst.qos_for(j)[digit[j]];
    const auto xs = axis_tuples(inst, z, Axis::kX, options.all_permutations);
    const auto ys = axis_tuples(inst, z, Axis::kY, options.all_permutations);
    for (const Tuple& tx : xs) {
      for (const Tuple& ty : ys) {
        for (int j = 0; j < p; ++j) pls[j] = {tx[j], ty[j], z[j]};
        consider(best, inst, cov, pls);
      }
    }
    int k = p - 1;
    while (k >= 0 && ++digit[k] == radix[k]) digit[k--] = 0;
    if (k < 0) break;
  }
  return best;
}

OracleResult brute_force_1d(const Instance& inst, const OracleOptions& options) {
  inst.validate();
  if (inst.dimension != Dimension::kOneD)
    throw std::invalid_argument("brute_force_1d expects a 1D instance");
  if (inst.dzs.empty()) return empty_result(inst);
  const Coverage cov = Coverage::of(inst);
  const int p = inst.p;
  std::vector<double> z(p);
  for (int j = 0; j < p; ++j) {
    if (inst.qos_for(j).size() != 1)
      throw std::invalid_argument("1D oracle needs one scale per service zone");
    z[j] = inst.qos_for(j).min();
  }
  guard(tuple_estimate(2 * inst.dzs.size(), p, options.all_permutations), options);

  OracleResult best;
  std::vector<Placement> pls(p);
  for (const Tuple& tx : axis_tuples(inst, z, Axis::kX, options.all_permutations)) {
    for (int j = 0; j < p; ++j) pls[j] = {tx[j], 0.0, z[j]};
    consider(best, inst, cov, pls);
  }
  return best;
}

}  // namespace pmclp
