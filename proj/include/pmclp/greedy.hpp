#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pmclp/model.hpp"
#include "pmclp/reward.hpp"

namespace pmclp {

// Solver for the single service zone problem on an arbitrary demand set.
using SspSolver = std::function<SspResult(std::span<const DemandZone>,
                                          const QosSet&, const Coverage&)>;

struct GreedyTrace {
  // Reward captured by each iteration on the demand left by the previous ones.
  std::vector<double> iteration_rewards;
  // Sum of iteration_rewards.
  double total = 0.0;
  // Placements in iteration order; reward is covered_reward of the
  // placements, which can exceed `total` when a later zone has a better QoS
  // than an earlier zone it overlaps.
  Solution solution;
};

// Places zones one at a time, each at the exact single-zone optimum of the
// demand not yet covered.
GreedyTrace greedy(const Instance& instance);

// Same loop with a caller-supplied (possibly approximate) single-zone solver.
GreedyTrace pseudo_greedy(const Instance& instance, const SspSolver& ssp);

// Single-zone solver that returns the lowest-reward grid candidate still
// worth at least `factor` times the exact optimum. Used to exercise the
// pseudo-greedy guarantee with a deliberately weak solver.
SspSolver weakest_admissible_ssp(double factor);

// 1 - ((p - factor) / p)^p.
double greedy_ratio_bound(int p, double factor = 1.0);

}  // namespace pmclp
