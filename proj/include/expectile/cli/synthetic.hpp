#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "expectile/analytic.hpp"

namespace expectile::cli {

/// Portable seeded generator: std::mt19937_64 (fully specified by the
/// standard), uniform doubles from the top 53 bits, normals by Box-Muller.
/// The same seed gives the same stream with any standard library.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  double standard_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::vector<double> draw_sample(const AnalyticDistribution& d, std::size_t n,
                                std::uint64_t seed);

}  // namespace expectile::cli
