#include "pmclp/instgen.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace pmclp {
namespace {

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal(double mean, double sd) {
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

Instance draw(const GenConfig& c, bool one_d) {
  c.validate();
  Stream rng(c.seed);
  std::vector<std::pair<double, double>> centres;
  for (int k = 0; k < c.num_concentrations; ++k) {
    const double cx = rng.uniform(0.0, c.region);
    const double cy = one_d ? 0.0 : rng.uniform(0.0, c.region);
    centres.emplace_back(cx, cy);
  }

  Instance inst;
  inst.p = c.p;
  const double sd = c.r / 3.0;
  for (int i = 0; i < c.n; ++i) {
    const double u = rng.uniform();
    int category = c.num_concentrations;  // free
    double acc = 0.0;
    for (int k = 0; k < c.num_concentrations; ++k) {
      acc += c.anchor_prob;
      if (u < acc) {
        category = k;
        break;
      }
    }
    double x, y = 0.0;
    if (category < c.num_concentrations) {
      x = rng.normal(centres[category].first, sd);
      if (!one_d) y = rng.normal(centres[category].second, sd);
    } else {
      x = rng.uniform(0.0, c.region);
      if (!one_d) y = rng.uniform(0.0, c.region);
    }
    const double w = rng.uniform(c.dim_range.first, c.dim_range.second);
    const double l = one_d ? 0.0 : rng.uniform(c.dim_range.first, c.dim_range.second);
    const double v = rng.uniform(c.rate_range.first, c.rate_range.second);
    inst.dzs.push_back({{x, y, w, l}, v});
  }

  if (one_d) {
    inst.dimension = Dimension::kOneD;
    inst.base = {c.base_dims.first, 0.0};
    std::vector<QosSet> per;
    for (int j = 1; j <= c.p; ++j) per.emplace_back(std::vector<double>{double(j)});
    inst.qos = per;
  } else {
    inst.base = {c.base_dims.first, c.base_dims.second};
    std::vector<double> scales;
    for (int k = 1; k <= c.m; ++k) scales.push_back(k);
    inst.qos = QosSet(scales);
  }
  inst.validate();
  return inst;
}

}  // namespace

void GenConfig::validate() const {
  if (n < 0) throw ModelError("n must be nonnegative");
  if (p < 1) throw ModelError("p must be at least 1");
  if (m < 1) throw ModelError("m must be at least 1");
  if (num_concentrations < 0) throw ModelError("negative concentration count");
  if (anchor_prob < 0.0 || free_prob < 0.0)
    throw ModelError("probabilities must be nonnegative");
  if (std::abs(num_concentrations * anchor_prob + free_prob - 1.0) > kEpsilon)
    throw ModelError("category probabilities must sum to 1");
  if (!(region > 0.0) || !(r > 0.0)) throw ModelError("region and r must be positive");
  auto positive = [](std::pair<double, double> range) {
    return range.first > 0.0 && range.second >= range.first;
  };
  if (!positive(dim_range) || !positive(rate_range))
    throw ModelError("dimension and rate ranges must be positive intervals");
  if (!(base_dims.first > 0.0) || !(base_dims.second > 0.0))
    throw ModelError("base dimensions must be positive");
}

Instance generate(const GenConfig& config) {
  if (config.dimension == Dimension::kOneD) return generate_1d(config);
  return draw(config, false);
}

Instance generate_1d(const GenConfig& config) { return draw(config, true); }

}  // namespace pmclp
