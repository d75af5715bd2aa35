#pragma once

#include <variant>

#include "expectile/distribution.hpp"

namespace expectile {

struct NormalFamily {
  double mu;
  double sigma;
};

struct UniformFamily {
  double a;
  double b;
};

struct PointMassFamily {
  double c;
};

using AnalyticFamily = std::variant<NormalFamily, UniformFamily, PointMassFamily>;

/// Closed-form oracle for a few parametric families.
class AnalyticDistribution final : public DistributionOracle {
 public:
  /// Throws InvalidParameter unless sigma > 0 and all parameters are finite.
  static AnalyticDistribution normal(double mu, double sigma);
  /// Throws InvalidParameter unless a < b and both are finite.
  static AnalyticDistribution uniform(double a, double b);
  static AnalyticDistribution point_mass(double c);

  const AnalyticFamily& family() const noexcept { return family_; }

  /// Standard deviation of the family (0 for a point mass).
  double stddev() const;

  double mean() const override;
  TailMoments evaluate(double x) const override;
  TailMoments evaluate_inclusive(double x) const override;
  std::optional<SupportBounds> support() const override;
  std::optional<SecondPartialMoments> second_partial_moments(
      double x) const override;

 private:
  explicit AnalyticDistribution(AnalyticFamily family) : family_(family) {}

  AnalyticFamily family_;
};

}  // namespace expectile
