#pragma once

#include <cstdint>
#include <utility>

#include "pmclp/model.hpp"

namespace pmclp {

struct GenConfig {
  std::uint64_t seed = 1;
  int n = 50;
  double region = 1000.0;
  double r = 270.0;
  int num_concentrations = 3;
  double anchor_prob = 0.31;
  double free_prob = 0.07;
  std::pair<double, double> dim_range{5.0, 50.0};
  std::pair<double, double> rate_range{1.0, 10.0};
  std::pair<double, double> base_dims{50.0, 40.0};
  Dimension dimension = Dimension::kTwoD;
  int p = 2;
  int m = 1;  // 2D: shared scales {1..m}. 1D: zone j gets scale j.

  // Throws ModelError when the probabilities or ranges are unusable.
  void validate() const;
};

// Draw order per seed: concentration centres first, then for every demand
// zone its category, position, dimensions and rate. Uniforms come from the
// top 53 bits of mt19937_64 and normals from Box-Muller, so the stream does
// not depend on the standard library's distribution classes.
Instance generate(const GenConfig& config);

// Same stream projected onto the x axis: y = 0 and zero height for every
// demand zone, base height 0, and zone j fixed at scale j.
Instance generate_1d(const GenConfig& config);

}  // namespace pmclp
