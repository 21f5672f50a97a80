#include "pmclp/bnb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "search_driver.hpp"

namespace pmclp {

std::vector<std::pair<std::size_t, std::size_t>> partition_ranges(
    std::span<const double> values, std::size_t lo, std::size_t hi,
    double beta) {
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  if (hi <= lo) return parts;
  if (hi - lo == 1) {
    parts.emplace_back(lo, hi);
    return parts;
  }
  double max_gap = 0.0;
  for (std::size_t i = lo; i + 1 < hi; ++i)
    max_gap = std::max(max_gap, values[i + 1] - values[i]);
  const double threshold = beta * max_gap;
  std::size_t start = lo;
  for (std::size_t i = lo; i + 1 < hi; ++i) {
    if (values[i + 1] - values[i] > threshold) {
      parts.emplace_back(start, i + 1);
      start = i + 1;
    }
  }
  parts.emplace_back(start, hi);
  if (parts.size() == 1) {
    parts.clear();
    for (std::size_t i = lo; i < hi; ++i) parts.emplace_back(i, i + 1);
  }
  return parts;
}

std::vector<std::vector<double>> partition(std::span<const double> values,
                                           double beta) {
  std::vector<std::vector<double>> out;
  for (auto [lo, hi] : partition_ranges(values, 0, values.size(), beta))
    out.emplace_back(values.begin() + lo, values.begin() + hi);
  return out;
}

double priority_score(double coord, std::span<const DemandZone> dzs, double z,
                      Eta eta, Axis axis) {
  double score = 0.0;
  for (const DemandZone& d : dzs) {
    const double lo = axis == Axis::kX ? d.rect.x : d.rect.y;
    const double len = axis == Axis::kX ? d.rect.w : d.rect.l;
    if (lo <= coord && coord < lo + len) score += rate(d.v, z, eta);
  }
  return score;
}

std::pair<std::size_t, std::size_t> bracket(std::span<const double> grid,
                                            double v, double eps) {
  const std::size_t n = grid.size();
  if (n == 0) return {0, 0};
  const std::size_t k = static_cast<std::size_t>(
      std::lower_bound(grid.begin(), grid.end(), v - eps) - grid.begin());
  if (k < n && std::abs(grid[k] - v) <= eps) return {k, k + 1};
  if (k == 0) return {0, 1};
  if (k == n) return {n - 1, n};
  return {k - 1, k + 1};
}

namespace bnb {
namespace {

std::vector<double> priorities_for(std::span<const double> grid,
                                   std::span<const DemandZone> dzs, double z,
                                   Eta eta, Axis axis) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double c : grid) out.push_back(priority_score(c, dzs, z, eta, axis));
  return out;
}

Candidates& along(Node& node, Axis axis, int j) {
  return axis == Axis::kX ? node.xs[j] : node.ys[j];
}
const Candidates& along(const Node& node, Axis axis, int j) {
  return axis == Axis::kX ? node.xs[j] : node.ys[j];
}

// Children restricting zone `bs` on `axis` to contiguous parts of its grid,
// ordered by descending best member priority.
void partition_children(const Node& node, const Context& ctx,
                        const SolverConfig& config, Axis axis,
                        std::vector<Node>& out) {
  const int bs = node.bs;
  const int zi = node.z_index[bs];
  const Candidates& c = along(node, axis, bs);
  const std::span<const double> grid = ctx.grid(zi, axis);
  const std::span<const double> prio = ctx.priorities(zi, axis);

  auto parts = partition_ranges(grid, c.lo, c.hi, config.beta);
  std::vector<double> part_priority;
  part_priority.reserve(parts.size());
  for (auto [lo, hi] : parts)
    part_priority.push_back(*std::max_element(prio.begin() + lo, prio.begin() + hi));
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return part_priority[a] > part_priority[b];
  });

  for (std::size_t idx : order) {
    Node child = node;
    Candidates& target = along(child, axis, bs);
    target = Candidates::range(parts[idx].first, parts[idx].second);
    if (axis == Axis::kX && target.fixed()) ++child.bs;
    out.push_back(std::move(child));
  }
}

// Children fixing zone `bs` at service critical values generated by the
// zones already fixed along `axis`. Only called while the zone still holds
// its full grid.
void scv_children(const Node& node, const Context& ctx,
                  const SolverConfig& config, Axis axis,
                  std::vector<Node>& out) {
  const int bs = node.bs;
  const int zi = node.z_index[bs];
  const double z = ctx.qos()[zi];
  std::vector<FixedZone> fixed;
  for (int j = 0; j < ctx.p(); ++j) {
    if (j == bs || !along(node, axis, j).fixed()) continue;
    const double coord = ctx.coordinate(along(node, axis, j), node.z_index[j], axis);
    const double scale = ctx.qos()[node.z_index[j]];
    Placement pl{axis == Axis::kX ? coord : 0.0, axis == Axis::kY ? coord : 0.0, scale};
    fixed.push_back({pl, scale});
  }
  if (fixed.empty()) return;

  const std::span<const double> grid = ctx.grid(zi, axis);
  const CriticalValueSet outer = oscvs(fixed, z, ctx.coverage().base, axis);
  std::vector<double> values;
  for (double v : outer.values)
    if (!contains_near(grid, v, config.epsilon)) values.push_back(v);
  if (config.scv_mode == ScvMode::kFull) {
    const CriticalValueSet inner = iscvs(fixed, z, ctx.coverage().base, axis);
    for (double v : inner.values)
      if (!contains_near(grid, v, config.epsilon) &&
          !contains_near(outer.values, v, config.epsilon))
        values.push_back(v);
  }

  for (double v : values) {
    Node child = node;
    along(child, axis, bs) = Candidates::scv(v);
    if (axis == Axis::kX) ++child.bs;
    out.push_back(std::move(child));
  }
}

// Chooses the next zone to branch on along y. Zones fixed at an x inner DCV
// are interchangeable, so only the smallest such index is tried; every zone
// fixed at an x SCV is tried.
void permutation_children(const Node& node, const Context& ctx,
                          std::vector<Node>& out) {
  for (int j = 0; j < ctx.p(); ++j) {
    if (node.ys[j].fixed()) continue;
    const CandidateKind kind = node.xs[j].kind;
    bool first_idcv = false;
    if (kind == CandidateKind::kFixedIdcv) {
      first_idcv = true;
      for (int k = 0; k < j; ++k)
        if (!node.ys[k].fixed() && node.xs[k].kind == CandidateKind::kFixedIdcv)
          first_idcv = false;
    }
    if (first_idcv || kind == CandidateKind::kFixedScv) {
      Node child = node;
      child.ba = Axis::kY;
      child.bs = j;
      out.push_back(std::move(child));
    }
  }
}

}  // namespace

Context::Context(const Instance& instance)
    : instance_(&instance), cov_(Coverage::of(instance)) {
  if (!instance.shared_qos())
    throw std::invalid_argument("the 2D solver needs a shared QoS set");
  qos_ = std::get<QosSet>(instance.qos);
  for (double z : qos_.factors()) {
    matrices_.push_back(build_matrix(instance.dzs, z, cov_));
    const RewardMatrix& m = matrices_.back();
    x_priority_.push_back(
        priorities_for(m.xs().values, instance.dzs, z, cov_.eta, Axis::kX));
    y_priority_.push_back(
        priorities_for(m.ys().values, instance.dzs, z, cov_.eta, Axis::kY));
    cross_scale_max_ = std::max(cross_scale_max_, m.max());
  }
}

std::span<const double> Context::grid(int zi, Axis axis) const {
  const RewardMatrix& m = matrices_[zi];
  return axis == Axis::kX ? std::span<const double>(m.xs().values)
                          : std::span<const double>(m.ys().values);
}

std::span<const double> Context::priorities(int zi, Axis axis) const {
  return axis == Axis::kX ? x_priority_[zi] : y_priority_[zi];
}

double Context::coordinate(const Candidates& c, int zi, Axis axis) const {
  if (c.kind == CandidateKind::kFixedScv) return c.value;
  return grid(zi, axis)[c.lo];
}

Node root(const Context& ctx) {
  Node node;
  node.xs.assign(ctx.p(), Candidates{});
  node.ys.assign(ctx.p(), Candidates{});
  node.z_index.assign(ctx.p(), -1);
  return node;
}

bool is_leaf(const Node& node) {
  for (std::size_t j = 0; j < node.xs.size(); ++j)
    if (!node.xs[j].fixed() || !node.ys[j].fixed()) return false;
  return true;
}

std::vector<Placement> leaf_placements(const Node& node, const Context& ctx) {
  std::vector<Placement> out;
  for (int j = 0; j < ctx.p(); ++j) {
    const int zi = node.z_index[j];
    out.push_back({ctx.coordinate(node.xs[j], zi, Axis::kX),
                   ctx.coordinate(node.ys[j], zi, Axis::kY), ctx.qos()[zi]});
  }
  return out;
}

std::vector<Node> branch(const Node& node, const Context& ctx,
                         const SolverConfig& config) {
  std::vector<Node> out;
  if (node.ba == Axis::kX && node.bs >= ctx.p()) {
    permutation_children(node, ctx, out);
    return out;
  }
  const int bs = node.bs;
  const Candidates& c = along(node, node.ba, bs);
  if (c.kind == CandidateKind::kCrossScale) {
    for (int zi = 0; zi < static_cast<int>(ctx.qos().size()); ++zi) {
      Node child = node;
      child.z_index[bs] = zi;
      child.xs[bs] = Candidates::full(ctx.grid(zi, Axis::kX).size());
      child.ys[bs] = Candidates::full(ctx.grid(zi, Axis::kY).size());
      out.push_back(std::move(child));
    }
    return out;
  }
  if (c.fixed()) {
    // Only reachable on the y axis once the branching zone is placed.
    permutation_children(node, ctx, out);
    return out;
  }
  partition_children(node, ctx, config, node.ba, out);
  if (c.kind == CandidateKind::kFullGrid)
    scv_children(node, ctx, config, node.ba, out);
  return out;
}

double upper_bound(const Node& node, const Context& ctx) {
  if (is_leaf(node))
    return covered_reward(ctx.instance().dzs, leaf_placements(node, ctx),
                          ctx.coverage());
  double ub = 0.0;
  for (int j = 0; j < ctx.p(); ++j) {
    const int zi = node.z_index[j];
    if (zi < 0) {
      ub += ctx.cross_scale_max();
      continue;
    }
    auto rows = [&](const Candidates& c, Axis axis) -> std::pair<std::size_t, std::size_t> {
      if (c.kind == CandidateKind::kFixedScv) return bracket(ctx.grid(zi, axis), c.value);
      return {c.lo, c.hi};
    };
    const auto [r0, r1] = rows(node.xs[j], Axis::kX);
    const auto [c0, c1] = rows(node.ys[j], Axis::kY);
    ub += ctx.matrix(zi).max_block(r0, r1, c0, c1);
  }
  return ub;
}

namespace {

struct Problem2D {
  const Context& ctx;
  const SolverConfig& config;
  Node root() const { return bnb::root(ctx); }
  double upper_bound(const Node& n) const { return bnb::upper_bound(n, ctx); }
  bool is_leaf(const Node& n) const { return bnb::is_leaf(n); }
  std::vector<Placement> placements(const Node& n) const {
    return leaf_placements(n, ctx);
  }
  std::vector<Node> branch(const Node& n) const {
    return bnb::branch(n, ctx, config);
  }
};

}  // namespace
}  // namespace bnb

SolveResult solve(const Instance& instance, const SolverConfig& config) {
  instance.validate();
  if (instance.dimension != Dimension::kTwoD)
    throw std::invalid_argument("solve expects a 2D instance; use solve_1d");
  const bnb::Context ctx(instance);
  if (instance.dzs.empty()) {
    SolveResult result;
    result.solution = greedy(instance).solution;
    result.optimal = true;
    return result;
  }
  return detail::depth_first<bnb::Node>(instance, config,
                                        bnb::Problem2D{ctx, config});
}

}  // namespace pmclp
