#include "pmclp/bnb1d.hpp"

#include <algorithm>
#include <stdexcept>

#include "search_driver.hpp"

namespace pmclp::bnb1d {

Context::Context(const Instance& instance)
    : instance_(&instance), cov_(Coverage::of(instance)) {
  for (int j = 0; j < instance.p; ++j) {
    const QosSet& q = instance.qos_for(j);
    if (q.size() != 1)
      throw std::invalid_argument("1D solver needs one scale per service zone");
    scales_.push_back(q.min());
    rows_.push_back(build_matrix(instance.dzs, q.min(), cov_));
    std::vector<double> prio;
    for (double x : rows_.back().xs().values)
      prio.push_back(priority_score(x, instance.dzs, q.min(), cov_.eta, Axis::kX));
    priority_.push_back(std::move(prio));
  }
}

double Context::coordinate(const Candidates& c, int j) const {
  if (c.kind == CandidateKind::kFixedScv) return c.value;
  return grid(j)[c.lo];
}

Node root(const Context& ctx) {
  Node node;
  node.xs.assign(ctx.p(), Candidates{});
  return node;
}

bool is_leaf(const Node& node) {
  for (const Candidates& c : node.xs)
    if (!c.fixed()) return false;
  return true;
}

std::vector<Placement> leaf_placements(const Node& node, const Context& ctx) {
  std::vector<Placement> out;
  for (int j = 0; j < ctx.p(); ++j)
    out.push_back({ctx.coordinate(node.xs[j], j), 0.0, ctx.scale(j)});
  return out;
}

std::vector<Node> branch(const Node& node, const Context& ctx,
                         const SolverConfig& config) {
  std::vector<Node> out;
  if (node.bs < 0) {
    for (int j = 0; j < ctx.p(); ++j) {
      Node child = node;
      child.bs = child.bsfl = j;
      child.xs[j] = Candidates::full(ctx.grid(j).size());
      out.push_back(std::move(child));
    }
    return out;
  }

  const int bs = node.bs;
  const Candidates& c = node.xs[bs];
  if (!c.fixed()) {
    const std::span<const double> grid = ctx.grid(bs);
    const std::span<const double> prio = ctx.priorities(bs);
    auto parts = partition_ranges(grid, c.lo, c.hi, config.beta);
    std::vector<double> best;
    for (auto [lo, hi] : parts)
      best.push_back(*std::max_element(prio.begin() + lo, prio.begin() + hi));
    std::vector<std::size_t> order(parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return best[a] > best[b]; });
    for (std::size_t i : order) {
      Node child = node;
      child.xs[bs] = Candidates::range(parts[i].first, parts[i].second);
      out.push_back(std::move(child));
    }
    return out;
  }

  std::vector<FixedZone> fixed;
  for (int j = 0; j < ctx.p(); ++j) {
    if (!node.xs[j].fixed()) continue;
    fixed.push_back({{ctx.coordinate(node.xs[j], j), 0.0, ctx.scale(j)}, ctx.scale(j)});
  }
  const BaseServiceZone& base = ctx.coverage().base;
  for (int l = 0; l < ctx.p(); ++l) {
    if (node.xs[l].fixed()) continue;
    // No IDCV exclusion here: below bsfl a zone may only take SCVs, and an
    // SCV that lands on an inner DCV must stay reachable.
    const CriticalValueSet outer = oscvs(fixed, ctx.scale(l), base, Axis::kX);
    std::vector<double> values = outer.values;
    if (config.scv_mode == ScvMode::kFull) {
      for (double v : iscvs(fixed, ctx.scale(l), base, Axis::kX).values)
        if (!contains_near(outer.values, v, config.epsilon)) values.push_back(v);
    }
    for (double v : values) {
      Node child = node;
      child.xs[l] = Candidates::scv(v);
      child.bs = l;
      out.push_back(std::move(child));
    }
    if (l > node.bsfl) {
      Node child = node;
      child.xs[l] = Candidates::full(ctx.grid(l).size());
      child.bs = l;
      out.push_back(std::move(child));
    }
  }
  return out;
}

double upper_bound(const Node& node, const Context& ctx) {
  if (is_leaf(node))
    return covered_reward(ctx.instance().dzs, leaf_placements(node, ctx),
                          ctx.coverage());
  double ub = 0.0;
  for (int j = 0; j < ctx.p(); ++j) {
    const Candidates& c = node.xs[j];
    const RewardMatrix& m = ctx.row(j);
    switch (c.kind) {
      case CandidateKind::kCrossScale:
        ub += m.max();
        break;
      case CandidateKind::kFixedScv: {
        const auto [r0, r1] = bracket(ctx.grid(j), c.value);
        ub += m.max_block(r0, r1, 0, m.cols());
        break;
      }
      default:
        ub += m.max_block(c.lo, c.hi, 0, m.cols());
    }
  }
  return ub;
}

namespace {

struct Problem1D {
  const Context& ctx;
  const SolverConfig& config;
  Node root() const { return bnb1d::root(ctx); }
  double upper_bound(const Node& n) const { return bnb1d::upper_bound(n, ctx); }
  bool is_leaf(const Node& n) const { return bnb1d::is_leaf(n); }
  std::vector<Placement> placements(const Node& n) const {
    return leaf_placements(n, ctx);
  }
  std::vector<Node> branch(const Node& n) const {
    return bnb1d::branch(n, ctx, config);
  }
};

}  // namespace
}  // namespace pmclp::bnb1d

namespace pmclp {

SolveResult solve_1d(const Instance& instance, const SolverConfig& config) {
  instance.validate();
  if (instance.dimension != Dimension::kOneD)
    throw std::invalid_argument("solve_1d expects a 1D instance");
  const bnb1d::Context ctx(instance);
  if (instance.dzs.empty()) {
    SolveResult result;
    result.solution = greedy(instance).solution;
    result.optimal = true;
    return result;
  }
  return detail::depth_first<bnb1d::Node>(instance, config,
                                          bnb1d::Problem1D{ctx, config});
}

}  // namespace pmclp
