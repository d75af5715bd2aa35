#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "expectile/distribution.hpp"

namespace expectile {

/// Empirical distribution of a finite sample z_1 <= ... <= z_N.
///
/// Values are kept sorted with multiplicity, together with running sums so
/// that every tail quantity costs one binary search. Tail sums are always
/// differences of the stored prefix sums, which fixes the summation order.
class EmpiricalDistribution final : public DistributionOracle {
 public:
  /// Throws EmptySample or NonFiniteDatum.
  static EmpiricalDistribution from_data(std::vector<double> data);

  std::span<const double> values() const noexcept { return values_; }
  /// prefix_sums()[k] = z_1 + ... + z_{k+1}; the last entry is the total.
  std::span<const double> prefix_sums() const noexcept {
    return std::span<const double>(prefix_).subspan(1);
  }
  std::size_t size() const noexcept { return values_.size(); }
  double total() const noexcept { return prefix_.back(); }

  /// Number of values <= x.
  std::size_t count_at_or_below(double x) const noexcept;
  /// Number of values < x.
  std::size_t count_below(double x) const noexcept;
  /// Sum of the k smallest values.
  double head_sum(std::size_t k) const noexcept { return prefix_[k]; }
  /// Sum of all but the k smallest values.
  double tail_sum(std::size_t k) const noexcept {
    return prefix_.back() - prefix_[k];
  }

  /// Order statistic z_{ceil(p N)} (1-based, at least z_1).
  double lower_quantile(double p) const;

  /// Sample of the negated values.
  EmpiricalDistribution negated() const;

  double mean() const override { return mean_; }
  TailMoments evaluate(double x) const override;
  TailMoments evaluate_inclusive(double x) const override;
  std::optional<SupportBounds> support() const override {
    return SupportBounds{values_.front(), values_.back()};
  }
  /// Direct O(N) summation.
  std::optional<SecondPartialMoments> second_partial_moments(
      double x) const override;

 private:
  explicit EmpiricalDistribution(std::vector<double> sorted);
  TailMoments tails_split_at(std::size_t k, double x) const noexcept;

  std::vector<double> values_;
  std::vector<double> prefix_;  // prefix_[0] == 0, size N + 1
  double mean_;
};

}  // namespace expectile
