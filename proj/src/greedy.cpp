#include "pmclp/greedy.hpp"

#include <cmath>
#include <limits>

namespace pmclp {

GreedyTrace pseudo_greedy(const Instance& instance, const SspSolver& ssp) {
  const Coverage cov = Coverage::of(instance);
  GreedyTrace trace;
  std::vector<DemandZone> remaining = instance.dzs;
  for (int j = 0; j < instance.p; ++j) {
    const SspResult step = ssp(remaining, instance.qos_for(j), cov);
    trace.iteration_rewards.push_back(step.reward);
    trace.total += step.reward;
    trace.solution.placements.push_back(step.placement);
    if (!remaining.empty())
      remaining = trim_demand(remaining, step.placement, cov);
  }
  trace.solution.reward =
      covered_reward(instance.dzs, trace.solution.placements, cov);
  return trace;
}

GreedyTrace greedy(const Instance& instance) {
  return pseudo_greedy(instance, single_sz_problem);
}

SspSolver weakest_admissible_ssp(double factor) {
  return [factor](std::span<const DemandZone> dzs, const QosSet& qos,
                  const Coverage& cov) {
    const SspResult exact = single_sz_problem(dzs, qos, cov);
    if (dzs.empty()) return exact;
    const double threshold = factor * exact.reward;
    SspResult pick = exact;
    double pick_reward = std::numeric_limits<double>::infinity();
    for (double z : qos.factors()) {
      const RewardMatrix m = build_matrix(dzs, z, cov);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const double r = m.at(i, j);
          if (r >= threshold && r < pick_reward) {
            pick_reward = r;
            pick = {r, {m.xs()[i], m.ys()[j], z}};
          }
        }
      }
    }
    return pick;
  };
}

double greedy_ratio_bound(int p, double factor) {
  const double pd = static_cast<double>(p);
  return 1.0 - std::pow((pd - factor) / pd, pd);
}

}  // namespace pmclp
