#include "expectile/distribution.hpp"

namespace expectile {

double NegatedOracle::mean() const { return -base_.mean(); }

// P(-X > x) = P(X < -x) and E[-X 1{-X > x}] = E[X 1{X >= -x}] - E[X], so the
// strict view of -X is the inclusive view of X with the tails swapped.
TailMoments NegatedOracle::evaluate(double x) const {
  const TailMoments t = base_.evaluate_inclusive(-x);
  return {t.lpm, t.upm, t.cdf, t.survival, t.upe - base_.mean()};
}

TailMoments NegatedOracle::evaluate_inclusive(double x) const {
  const TailMoments t = base_.evaluate(-x);
  return {t.lpm, t.upm, t.cdf, t.survival, t.upe - base_.mean()};
}

std::optional<SupportBounds> NegatedOracle::support() const {
  if (auto s = base_.support()) return SupportBounds{-s->upper, -s->lower};
  return std::nullopt;
}

std::optional<SecondPartialMoments> NegatedOracle::second_partial_moments(
    double x) const {
  if (auto m = base_.second_partial_moments(-x)) {
    return SecondPartialMoments{m->lower, m->upper};
  }
  return std::nullopt;
}

}  // namespace expectile
