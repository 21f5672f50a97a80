#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pmclp/model.hpp"

namespace pmclp {

class OracleSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  double reward = 0.0;
  std::vector<Placement> placements;
  std::uint64_t evaluations = 0;
};

struct OracleOptions {
  // When false only the sequence 1..p is enumerated on each axis.
  bool all_permutations = true;
  double max_evaluations = 1e8;
};

// Exhaustive search over critical-value tuples. Shares only geometry and
// covered_reward with the solvers.
OracleResult brute_force_2d(const Instance& instance,
                            const OracleOptions& options = {});
OracleResult brute_force_1d(const Instance& instance,
                            const OracleOptions& options = {});

}  // namespace pmclp
