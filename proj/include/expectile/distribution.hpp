#pragma once

#include <optional>

namespace expectile {

/// First-order tail quantities of a distribution at a point x.
///
/// With the strict convention (`DistributionOracle::evaluate`) the upper tail
/// is {X > x} and the lower tail {X <= x}; with the inclusive convention
/// (`evaluate_inclusive`) the upper tail is {X >= x} and the lower tail
/// {X < x}. The partial moments do not depend on the convention.
struct TailMoments {
  double upm;        ///< E(X - x)_+
  double lpm;        ///< E(X - x)_-
  double survival;   ///< mass of the upper tail
  double cdf;        ///< mass of the lower tail
  double upe;        ///< E[X * 1{upper tail}]
};

struct SecondPartialMoments {
  double upper;  ///< E(X - x)_+^2
  double lower;  ///< E(X - x)_-^2
};

struct SupportBounds {
  double lower;
  double upper;
};

/// Provider of the expectations the expectile maps are built from.
///
/// Implementations are immutable after construction and safe to share
/// between threads.
class DistributionOracle {
 public:
  virtual ~DistributionOracle() = default;

  virtual double mean() const = 0;
  virtual TailMoments evaluate(double x) const = 0;
  virtual TailMoments evaluate_inclusive(double x) const = 0;
  virtual std::optional<SupportBounds> support() const = 0;

  /// Only oracles that can supply them override this; the default has none.
  virtual std::optional<SecondPartialMoments> second_partial_moments(
      double /*x*/) const {
    return std::nullopt;
  }

  double upper_partial_moment(double x) const { return evaluate(x).upm; }
  double lower_partial_moment(double x) const { return evaluate(x).lpm; }
  double survival(double x) const { return evaluate(x).survival; }
  double cdf(double x) const { return evaluate(x).cdf; }
  double upper_partial_expectation(double x) const { return evaluate(x).upe; }
};

/// Oracle of -X viewed through an oracle of X. Holds a reference; the base
/// oracle must outlive it.
class NegatedOracle final : public DistributionOracle {
 public:
  explicit NegatedOracle(const DistributionOracle& base) : base_(base) {}

  double mean() const override;
  TailMoments evaluate(double x) const override;
  TailMoments evaluate_inclusive(double x) const override;
  std::optional<SupportBounds> support() const override;
  std::optional<SecondPartialMoments> second_partial_moments(
      double x) const override;

 private:
  const DistributionOracle& base_;
};

}  // namespace expectile
