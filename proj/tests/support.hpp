#pragma once

// Helpers shared by the unit and acceptance tests. Nothing here calls into
// the critical-value or search code.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pmclp/model.hpp"

namespace testing_support {

using namespace pmclp;

inline Instance w1(std::vector<double> scales = {1.0, 2.0}, int p = 2) {
  Instance inst;
  inst.dzs = {{{0, 0, 4, 4}, 1.0}};
  inst.base = {2, 2};
  inst.p = p;
  inst.qos = QosSet(scales);
  return inst;
}

inline Instance line_example() {
  Instance inst;
  inst.dimension = Dimension::kOneD;
  inst.dzs = {{{0, 0, 10, 0}, 1.0}};
  inst.base = {2, 0};
  inst.p = 2;
  inst.qos = std::vector<QosSet>{QosSet({1.0}), QosSet({2.0})};
  return inst;
}

// Covered reward by sampling the centre of every cell of a lattice with
// spacing `h`. Exact when every rectangle edge lies on the lattice: each
// sampled point is paid once, at the best rate among the zones covering it.
inline double raster_reward(const Instance& inst, const std::vector<Placement>& pls,
                            double h = 1.0) {
  const bool one_d = inst.dimension == Dimension::kOneD;
  double total = 0.0;
  for (const DemandZone& d : inst.dzs) {
    const long nx = std::lround(d.rect.w / h);
    const long ny = one_d ? 1 : std::lround(d.rect.l / h);
    for (long i = 0; i < nx; ++i) {
      const double px = d.rect.x + (i + 0.5) * h;
      for (long k = 0; k < ny; ++k) {
        const double py = d.rect.y + (k + 0.5) * h;
        double best = 0.0;
        for (const Placement& pl : pls) {
          const double w = inst.base.w0 * pl.z;
          const double l = inst.base.l0 * pl.z;
          const bool in_x = px > pl.x && px < pl.x + w;
          const bool in_y = one_d || (py > pl.y && py < pl.y + l);
          if (in_x && in_y) best = std::max(best, d.v / pl.z);
        }
        total += best * h * (one_d ? 1.0 : h);
      }
    }
  }
  return total;
}

// Small instance with integer coordinates and sizes.
inline Instance random_lattice_instance(std::mt19937& rng, int n, int p,
                                        std::vector<double> scales, bool one_d = false) {
  std::uniform_int_distribution<int> pos(0, 12), len(1, 6), rate(1, 5);
  Instance inst;
  inst.p = p;
  if (one_d) {
    inst.dimension = Dimension::kOneD;
    inst.base = {2, 0};
    std::vector<QosSet> per;
    for (int j = 0; j < p; ++j) per.emplace_back(std::vector<double>{scales[j % scales.size()]});
    inst.qos = per;
  } else {
    inst.base = {2, 3};
    inst.qos = QosSet(scales);
  }
  for (int i = 0; i < n; ++i) {
    const double x = pos(rng), w = len(rng);
    const double y = one_d ? 0.0 : pos(rng), l = one_d ? 0.0 : len(rng);
    inst.dzs.push_back({{x, y, w, l}, static_cast<double>(rate(rng))});
  }
  return inst;
}

inline bool rel_close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace testing_support
