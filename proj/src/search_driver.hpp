#pragma once

// Depth-first branch-and-bound loop shared by the 2D and 1D solvers.

#include <chrono>
#include <vector>

#include "pmclp/bnb.hpp"
#include "pmclp/greedy.hpp"

namespace pmclp::detail {

template <class Node, class Problem>
SolveResult depth_first(const Instance& instance, const SolverConfig& config,
                        const Problem& problem) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  SolveResult result;
  const GreedyTrace initial = greedy(instance);
  result.solution = initial.solution;
  double lower = initial.solution.reward;
  result.stats.best_reward_history.emplace_back(0, lower);
  result.stats.optimal_found_time_s = elapsed();

  std::vector<Node> stack;
  stack.push_back(problem.root());
  bool timed_out = false;
  std::uint64_t& nodes = result.stats.nodes_explored;
  while (!stack.empty()) {
    if ((nodes & 255u) == 0 && nodes > 0 && elapsed() > config.time_limit_s) {
      timed_out = true;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++nodes;

    const double ub = problem.upper_bound(node);
    if (ub <= lower + config.epsilon) continue;
    if (problem.is_leaf(node)) {
      lower = ub;
      result.solution.placements = problem.placements(node);
      result.solution.reward = ub;
      result.stats.best_reward_history.emplace_back(nodes, ub);
      result.stats.optimal_found_time_s = elapsed();
      continue;
    }
    std::vector<Node> children = problem.branch(node);
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.push_back(std::move(*it));
  }

  result.optimal = !timed_out;
  result.stats.wall_time_s = elapsed();
  return result;
}

}  // namespace pmclp::detail
