#pragma once

#include <span>
#include <vector>

#include "pmclp/critical.hpp"
#include "pmclp/model.hpp"

namespace pmclp {

// Rectangle used for measure computations. In 1D, segments are lifted to
// unit-height strips so that area equals covered length.
Rect measure_rect(const Rect& r, Dimension dimension);

// Reward captured from `dzs` by one service zone at (x, y) with scale z.
double single_sz_reward(std::span<const DemandZone> dzs, double x, double y,
                        double z, const Coverage& cov);

// Single-zone rewards over the inner-DCV grid of one scale.
class RewardMatrix {
 public:
  RewardMatrix() = default;
  RewardMatrix(double scale, CriticalValueSet xs, CriticalValueSet ys,
               std::vector<double> entries);

  double scale() const { return scale_; }
  const CriticalValueSet& xs() const { return xs_; }
  const CriticalValueSet& ys() const { return ys_; }
  std::size_t rows() const { return xs_.size(); }
  std::size_t cols() const { return ys_.size(); }
  bool empty() const { return entries_.empty(); }

  double at(std::size_t i, std::size_t j) const {
    return entries_[i * ys_.size() + j];
  }
  double max() const { return max_; }
  double row_max(std::size_t i) const { return row_max_[i]; }
  double col_max(std::size_t j) const { return col_max_[j]; }

  // Maximum over rows [r0, r1) x cols [c0, c1). Returns 0 for empty blocks.
  double max_block(std::size_t r0, std::size_t r1, std::size_t c0,
                   std::size_t c1) const;

 private:
  double scale_ = 1.0;
  CriticalValueSet xs_;
  CriticalValueSet ys_;
  std::vector<double> entries_;
  std::vector<double> row_max_;
  std::vector<double> col_max_;
  double max_ = 0.0;
};

RewardMatrix build_matrix(std::span<const DemandZone> dzs, double z,
                          const Coverage& cov);

// Total reward of a set of placements. Placements are applied in ascending
// order of z (ties by input order), so each covered point is paid at the
// best rate among the zones covering it.
double covered_reward(std::span<const DemandZone> dzs,
                      std::span<const Placement> placements,
                      const Coverage& cov);

// Removes the parts of every zone covered by `pl`. Pieces whose measure is
// below kEpsilon^2 are dropped.
std::vector<DemandZone> trim_demand(std::span<const DemandZone> dzs,
                                    const Placement& pl, const Coverage& cov);

struct SspResult {
  double reward = 0.0;
  Placement placement;
};

// Exact optimum of the single service zone problem over the inner-DCV grid
// of every scale in `qos`. Ties go to the smallest z, then x, then y.
SspResult single_sz_problem(std::span<const DemandZone> dzs,
                            const QosSet& qos, const Coverage& cov);

}  // namespace pmclp
