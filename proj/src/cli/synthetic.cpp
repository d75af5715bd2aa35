#include "expectile/cli/synthetic.hpp"

#include <cmath>
#include <numbers>

namespace expectile::cli {

double SeededSampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededSampler::standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::vector<double> draw_sample(const AnalyticDistribution& d, std::size_t n,
                                std::uint64_t seed) {
  SeededSampler sampler(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const AnalyticFamily& f = d.family();
    if (const auto* g = std::get_if<NormalFamily>(&f)) {
      out.push_back(g->mu + g->sigma * sampler.standard_normal());
    } else if (const auto* u = std::get_if<UniformFamily>(&f)) {
      out.push_back(u->a + (u->b - u->a) * sampler.uniform());
    } else {
      out.push_back(std::get<PointMassFamily>(f).c);
    }
  }
  return out;
}

}  // namespace expectile::cli
