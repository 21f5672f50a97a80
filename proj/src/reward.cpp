#include "pmclp/reward.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace pmclp {
namespace {

// Evaluates single-zone rewards on xs x ys. Each entry sums the same
// nonzero terms, in the same order, as single_sz_reward.
std::vector<double> evaluate_grid(std::span<const DemandZone> dzs, double z,
                                  const Coverage& cov,
                                  std::span<const double> xs,
                                  std::span<const double> ys) {
  const std::size_t n = dzs.size();
  std::vector<Rect> lifted(n);
  std::vector<double> rates(n);
  for (std::size_t k = 0; k < n; ++k) {
    lifted[k] = measure_rect(dzs[k].rect, cov.dimension);
    rates[k] = rate(dzs[k].v, z, cov.eta);
  }
  const Rect proto = measure_rect(sz_rect(cov.base, {0.0, 0.0, z}),
                                  cov.dimension);

  std::vector<double> entries(xs.size() * ys.size(), 0.0);
  std::vector<std::size_t> active;
  std::vector<double> dx_active;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double sx0 = xs[i];
    const double sx1 = xs[i] + proto.w;
    active.clear();
    dx_active.clear();
    for (std::size_t k = 0; k < n; ++k) {
      const double dx =
          std::min(lifted[k].right(), sx1) - std::max(lifted[k].x, sx0);
      if (dx > 0.0) {
        active.push_back(k);
        dx_active.push_back(dx);
      }
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const Rect s = measure_rect(
          sz_rect(cov.base, {xs[i], ys[j], z}), cov.dimension);
      double total = 0.0;
      for (std::size_t a = 0; a < active.size(); ++a) {
        const Rect& d = lifted[active[a]];
        const double dy = std::min(d.top(), s.top()) - std::max(d.y, s.y);
        if (dy <= 0.0) continue;
        total += rates[active[a]] * (dx_active[a] * dy);
      }
      entries[i * ys.size() + j] = total;
    }
  }
  return entries;
}

}  // namespace

Rect measure_rect(const Rect& r, Dimension dimension) {
  if (dimension == Dimension::kOneD) return Rect{r.x, 0.0, r.w, 1.0};
  return r;
}

double single_sz_reward(std::span<const DemandZone> dzs, double x, double y,
                        double z, const Coverage& cov) {
  const Rect s = measure_rect(sz_rect(cov.base, {x, y, z}), cov.dimension);
  double total = 0.0;
  for (const DemandZone& d : dzs) {
    const double a = overlap_area(measure_rect(d.rect, cov.dimension), s);
    if (a > 0.0) total += rate(d.v, z, cov.eta) * a;
  }
  return total;
}

RewardMatrix::RewardMatrix(double scale, CriticalValueSet xs,
                           CriticalValueSet ys, std::vector<double> entries)
    : scale_(scale),
      xs_(std::move(xs)),
      ys_(std::move(ys)),
      entries_(std::move(entries)),
      row_max_(xs_.size(), 0.0),
      col_max_(ys_.size(), 0.0) {
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      const double e = at(i, j);
      row_max_[i] = std::max(row_max_[i], e);
      col_max_[j] = std::max(col_max_[j], e);
      max_ = std::max(max_, e);
    }
  }
}

double RewardMatrix::max_block(std::size_t r0, std::size_t r1, std::size_t c0,
                               std::size_t c1) const {
  double best = 0.0;
  if (r0 >= r1 || c0 >= c1) return best;
  if (c0 == 0 && c1 == cols()) {
    for (std::size_t i = r0; i < r1; ++i) best = std::max(best, row_max_[i]);
    return best;
  }
  if (r0 == 0 && r1 == rows()) {
    for (std::size_t j = c0; j < c1; ++j) best = std::max(best, col_max_[j]);
    return best;
  }
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) best = std::max(best, at(i, j));
  return best;
}

RewardMatrix build_matrix(std::span<const DemandZone> dzs, double z,
                          const Coverage& cov) {
  CriticalValueSet xs = idcv_grid(dzs, z, cov.base, Axis::kX);
  CriticalValueSet ys = idcv_grid(dzs, z, cov.base, Axis::kY);
  std::vector<double> entries = evaluate_grid(dzs, z, cov, xs.values, ys.values);
  return RewardMatrix(z, std::move(xs), std::move(ys), std::move(entries));
}

double covered_reward(std::span<const DemandZone> dzs,
                      std::span<const Placement> placements,
                      const Coverage& cov) {
  if (placements.empty() || dzs.empty()) return 0.0;
  std::vector<std::size_t> order(placements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return placements[a].z < placements[b].z;
  });

  struct Piece {
    Rect rect;
    double v;
  };
  std::vector<Piece> pieces, next;
  pieces.reserve(dzs.size());
  for (const DemandZone& d : dzs)
    pieces.push_back({measure_rect(d.rect, cov.dimension), d.v});

  std::vector<Rect> scratch;
  double total = 0.0;
  for (std::size_t idx : order) {
    const Placement& pl = placements[idx];
    const Rect s = measure_rect(sz_rect(cov.base, pl), cov.dimension);
    next.clear();
    for (const Piece& piece : pieces) {
      const double a = overlap_area(piece.rect, s);
      if (a <= 0.0) {
        next.push_back(piece);
        continue;
      }
      total += rate(piece.v, pl.z, cov.eta) * a;
      scratch.clear();
      trim_out_into(piece.rect, s, scratch);
      for (const Rect& r : scratch) next.push_back({r, piece.v});
    }
    pieces.swap(next);
    if (pieces.empty()) break;
  }
  return total;
}

std::vector<DemandZone> trim_demand(std::span<const DemandZone> dzs,
                                    const Placement& pl, const Coverage& cov) {
  const Rect s = measure_rect(sz_rect(cov.base, pl), cov.dimension);
  const bool one_d = cov.dimension == Dimension::kOneD;
  std::vector<DemandZone> out;
  out.reserve(dzs.size());
  std::vector<Rect> scratch;
  for (const DemandZone& d : dzs) {
    scratch.clear();
    if (!trim_out_into(measure_rect(d.rect, cov.dimension), s, scratch)) {
      out.push_back(d);
      continue;
    }
    for (const Rect& r : scratch) {
      if (area(r) < kEpsilon * kEpsilon) continue;
      out.push_back({one_d ? Rect{r.x, 0.0, r.w, 0.0} : r, d.v});
    }
  }
  return out;
}

SspResult single_sz_problem(std::span<const DemandZone> dzs,
                            const QosSet& qos, const Coverage& cov) {
  SspResult best{0.0, {0.0, 0.0, qos.min()}};
  if (dzs.empty()) return best;
  double best_reward = -std::numeric_limits<double>::infinity();
  for (double z : qos.factors()) {
    const CriticalValueSet xs = idcv_grid(dzs, z, cov.base, Axis::kX);
    const CriticalValueSet ys = idcv_grid(dzs, z, cov.base, Axis::kY);
    const std::vector<double> grid =
        evaluate_grid(dzs, z, cov, xs.values, ys.values);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < ys.size(); ++j) {
        const double r = grid[i * ys.size() + j];
        if (r > best_reward + kEpsilon) {
          best_reward = r;
          best = {r, {xs[i], ys[j], z}};
        }
      }
    }
  }
  return best;
}

}  // namespace pmclp
