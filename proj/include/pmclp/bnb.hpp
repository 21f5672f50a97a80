#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pmclp/critical.hpp"
#include "pmclp/model.hpp"
#include "pmclp/reward.hpp"

namespace pmclp {

// Which service critical values may become branching candidates. kOuter is
// the reduced search space; kFull additionally branches on inner SCVs.
enum class ScvMode { kOuter, kFull };

struct SolverConfig {
  double beta = 0.5;
  double epsilon = kEpsilon;
  double time_limit_s = 18000.0;
  ScvMode scv_mode = ScvMode::kOuter;
};

struct SolverStats {
  std::uint64_t nodes_explored = 0;
  // (nodes explored so far, incumbent reward) at every improvement; the
  // first entry is the greedy start.
  std::vector<std::pair<std::uint64_t, double>> best_reward_history;
  double wall_time_s = 0.0;
  double optimal_found_time_s = 0.0;
};

struct SolveResult {
  Solution solution;
  bool optimal = false;
  SolverStats stats;
};

// Candidate coordinates of one zone along one axis.
enum class CandidateKind {
  kCrossScale,  // scale not chosen yet: union of inner DCVs over all scales
  kFullGrid,    // every inner DCV of the zone's scale
  kSubset,      // contiguous part of that grid
  kFixedIdcv,   // fixed at one inner DCV
  kFixedScv,    // fixed at a service critical value of other zones
};

struct Candidates {
  CandidateKind kind = CandidateKind::kCrossScale;
  // Index range [lo, hi) into the sorted grid of the zone's scale.
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  // Coordinate when kind == kFixedScv.
  double value = 0.0;

  bool fixed() const {
    return kind == CandidateKind::kFixedIdcv ||
           kind == CandidateKind::kFixedScv;
  }
  std::size_t count() const { return hi - lo; }

  static Candidates full(std::size_t n) {
    return {CandidateKind::kFullGrid, 0, static_cast<std::uint32_t>(n), 0.0};
  }
  static Candidates range(std::size_t lo, std::size_t hi) {
    const auto kind = hi - lo == 1 ? CandidateKind::kFixedIdcv
                                   : CandidateKind::kSubset;
    return {kind, static_cast<std::uint32_t>(lo),
            static_cast<std::uint32_t>(hi), 0.0};
  }
  static Candidates scv(double v) {
    return {CandidateKind::kFixedScv, 0, 0, v};
  }
};

// Splits coordinate-sorted values after every adjacent gap larger than
// beta times the largest gap. If that produces no cut, every value becomes
// its own part.
std::vector<std::vector<double>> partition(std::span<const double> values,
                                           double beta);

// Same rule on values[lo, hi), returned as index ranges in coordinate order.
std::vector<std::pair<std::size_t, std::size_t>> partition_ranges(
    std::span<const double> values, std::size_t lo, std::size_t hi,
    double beta);

// Sum of z-adjusted rates of the zones whose half-open extent along `axis`
// contains `coord`.
double priority_score(double coord, std::span<const DemandZone> dzs, double z,
                      Eta eta, Axis axis);

// Bracketing grid indices used to bound a zone fixed at an off-grid
// coordinate: the matching index when within eps, the two neighbours when
// inside the grid, or the nearest end.
std::pair<std::size_t, std::size_t> bracket(std::span<const double> grid,
                                            double v, double eps = kEpsilon);

namespace bnb {

struct Node {
  std::vector<Candidates> xs;
  std::vector<Candidates> ys;
  std::vector<int> z_index;  // index into the QoS set, -1 while unset
  Axis ba = Axis::kX;
  int bs = 0;  // branching zone; p means every x is fixed
};

// Data shared by every node of one solve: reward matrices, priority scores
// and the cross-scale bound.
class Context {
 public:
  explicit Context(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  const Coverage& coverage() const { return cov_; }
  const QosSet& qos() const { return qos_; }
  int p() const { return instance_->p; }
  const RewardMatrix& matrix(int zi) const { return matrices_[zi]; }
  std::span<const double> grid(int zi, Axis axis) const;
  std::span<const double> priorities(int zi, Axis axis) const;
  double cross_scale_max() const { return cross_scale_max_; }

  double coordinate(const Candidates& c, int zi, Axis axis) const;

 private:
  const Instance* instance_;
  Coverage cov_;
  QosSet qos_;
  std::vector<RewardMatrix> matrices_;
  std::vector<std::vector<double>> x_priority_;
  std::vector<std::vector<double>> y_priority_;
  double cross_scale_max_ = 0.0;
};

Node root(const Context& ctx);
bool is_leaf(const Node& node);
std::vector<Placement> leaf_placements(const Node& node, const Context& ctx);
std::vector<Node> branch(const Node& node, const Context& ctx,
                         const SolverConfig& config);
double upper_bound(const Node& node, const Context& ctx);

}  // namespace bnb

// Exact solver for 2D instances with a shared QoS set.
SolveResult solve(const Instance& instance, const SolverConfig& config = {});

}  // namespace pmclp
