#include "expectile/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "expectile/errors.hpp"

namespace expectile {

EmpiricalDistribution EmpiricalDistribution::from_data(
    std::vector<double> data) {
  if (data.empty()) throw EmptySample();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) throw NonFiniteDatum(i);
  }
  std::sort(data.begin(), data.end());
  return EmpiricalDistribution(std::move(data));
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> sorted)
    : values_(std::move(sorted)), prefix_(values_.size() + 1, 0.0) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    prefix_[k + 1] = prefix_[k] + values_[k];
  }
  mean_ = prefix_.back() / static_cast<double>(values_.size());
}

std::size_t EmpiricalDistribution::count_at_or_below(double x) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(values_.begin(), values_.end(), x) - values_.begin());
}

std::size_t EmpiricalDistribution::count_below(double x) const noexcept {
  return static_cast<std::size_t>(
      std::lower_bound(values_.begin(), values_.end(), x) - values_.begin());
}

double EmpiricalDistribution::lower_quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter("quantile level must lie in [0, 1]");
  }
  const auto n = static_cast<double>(values_.size());
  auto rank = static_cast<std::size_t>(std::ceil(p * n));
  rank = std::clamp<std::size_t>(rank, 1, values_.size());
  return values_[rank - 1];
}

EmpiricalDistribution EmpiricalDistribution::negated() const {
  std::vector<double> flipped(values_.rbegin(), values_.rend());
  for (double& v : flipped) v = -v;
  return EmpiricalDistribution(std::move(flipped));
}

// Lower tail = the k smallest values, upper tail = the rest.
TailMoments EmpiricalDistribution::tails_split_at(std::size_t k,
                                                  double x) const noexcept {
  const auto n = static_cast<double>(values_.size());
  const auto lower_count = static_cast<double>(k);
  const double upper_count = n - lower_count;
  const double upper_sum = tail_sum(k);
  TailMoments t{};
  t.survival = upper_count / n;
  t.cdf = lower_count / n;
  t.upe = upper_sum / n;
  t.upm = (upper_sum - upper_count * x) / n;
  t.lpm = (lower_count * x - prefix_[k]) / n;
  return t;
}

TailMoments EmpiricalDistribution::evaluate(double x) const {
  return tails_split_at(count_at_or_below(x), x);
}

TailMoments EmpiricalDistribution::evaluate_inclusive(double x) const {
  return tails_split_at(count_below(x), x);
}

std::optional<SecondPartialMoments>
EmpiricalDistribution::second_partial_moments(double x) const {
  double upper = 0.0;
  double lower = 0.0;
  for (double z : values_) {
    const double d = z - x;
    if (d > 0.0) {
      upper += d * d;
    } else {
      lower += d * d;
    }
  }
  const auto n = static_cast<double>(values_.size());
  return SecondPartialMoments{upper / n, lower / n};
}

}  // namespace expectile
