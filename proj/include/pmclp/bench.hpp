#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmclp/bnb.hpp"
#include "pmclp/instgen.hpp"

namespace pmclp {

struct BenchConfig {
  std::vector<int> ps{2};
  std::vector<int> ms{2};  // ignored in 1D
  std::vector<int> ns{10};
  int seeds = 10;          // instances per (p, m, n) group
  std::uint64_t base_seed = 1;
  bool one_d = false;
  GenConfig gen;           // template for everything the sweep does not set
  SolverConfig solver;
  int jobs = 1;
};

struct BenchRun {
  int p = 0, m = 0, n = 0;
  std::uint64_t seed = 0;
  std::uint64_t nodes = 0;
  double t = 0.0, t1 = 0.0, t_h = 0.0;
  double greedy_reward = 0.0;
  double exact_reward = 0.0;
  bool optimal = false;
  std::string error;  // nonempty when the run failed
  Instance instance;
  SolveResult exact;
};

struct BenchGroup {
  int p = 0, m = 0, n = 0;
  int count = 0;
  double nodes = 0.0, t = 0.0, t1 = 0.0, t1_over_t = 0.0, t_h = 0.0;
  double alpha = 0.0;
  double min_alpha = 0.0;
  bool all_optimal = true;
  int failures = 0;
};

struct BenchReport {
  bool one_d = false;
  double time_limit_s = 0.0;
  std::vector<BenchRun> runs;
  std::vector<BenchGroup> groups;

  static std::vector<std::string> columns(bool one_d);
  std::string csv() const;
  std::string table() const;
};

BenchReport run_bench(const BenchConfig& config);

struct ScvCompareRun {
  int p = 0, m = 0, n = 0;
  std::uint64_t seed = 0;
  std::uint64_t nodes_outer = 0, nodes_full = 0;
  double reward_outer = 0.0, reward_full = 0.0;
  bool optimal = false;
};

// Solves every instance of the sweep twice, once per ScvMode.
std::vector<ScvCompareRun> run_scv_compare(const BenchConfig& config);
std::string scv_compare_csv(const std::vector<ScvCompareRun>& runs);

}  // namespace pmclp
