#include "expectile/maps.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "expectile/errors.hpp"

namespace expectile {
namespace {

double residual_of(double a, const TailMoments& t) {
  return a * t.upm - (1.0 - a) * t.lpm;
}

double weight_of(double a, const TailMoments& t) {
  return a * t.survival + (1.0 - a) * t.cdf;
}

double quotient_of(double a, double mean, const TailMoments& t) {
  const double numerator = a * t.upe + (1.0 - a) * (mean - t.upe);
  return numerator / weight_of(a, t);
}

}  // namespace

double loss(AlphaLevel alpha, double x, const DistributionOracle& d) {
  const auto m = d.second_partial_moments(x);
  if (!m) throw UnsupportedOracle("oracle has no second partial moments");
  const double a = alpha.value();
  return (1.0 - a) * m->lower + a * m->upper;
}

double foc_residual(AlphaLevel alpha, double x, const DistributionOracle& d) {
  return residual_of(alpha.value(), d.evaluate(x));
}

double tail_weight(AlphaLevel alpha, double x, const DistributionOracle& d) {
  return weight_of(alpha.value(), d.evaluate(x));
}

double one_sided_map(AlphaLevel alpha, double x, const DistributionOracle& d) {
  const double a = alpha.value();
  if (alpha.is_half()) return d.mean();
  const TailMoments t = d.evaluate(x);
  if (alpha.below_half()) {
    return d.mean() + (2.0 * a - 1.0) / (1.0 - a) * t.upm;
  }
  return d.mean() + (2.0 * a - 1.0) / a * t.lpm;
}

double one_sided_contraction(AlphaLevel alpha) {
  const double a = alpha.value();
  if (alpha.below_half()) return (1.0 - 2.0 * a) / (1.0 - a);
  return (2.0 * a - 1.0) / a;
}

MapEvaluation evaluate_two_sided(AlphaLevel alpha, double x,
                                 const DistributionOracle& d) {
  const double a = alpha.value();
  const TailMoments t = d.evaluate(x);
  MapEvaluation e{x, 0.0, residual_of(a, t), weight_of(a, t)};
  e.value = alpha.is_half() ? d.mean() : x + e.h / e.gamma;
  assert(std::abs(e.value - quotient_of(a, d.mean(), t)) <=
         1e-9 * (1.0 + std::abs(x) + std::abs(d.mean()) + std::abs(t.upe)));
  return e;
}

double two_sided_map(AlphaLevel alpha, double x, const DistributionOracle& d) {
  return evaluate_two_sided(alpha, x, d).value;
}

double two_sided_map_quotient(AlphaLevel alpha, double x,
                              const DistributionOracle& d) {
  return quotient_of(alpha.value(), d.mean(), d.evaluate(x));
}

double two_sided_map_recursive(AlphaLevel alpha, double x,
                               const DistributionOracle& d) {
  const double a = alpha.value();
  const TailMoments t = d.evaluate(x);
  return ((2.0 * a - 1.0) * t.upe + (1.0 - a) * d.mean()) /
         ((2.0 * a - 1.0) * t.survival + 1.0 - a);
}

}  // namespace expectile
