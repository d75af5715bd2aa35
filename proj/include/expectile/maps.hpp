#pragma once

#include "expectile/alpha.hpp"
#include "expectile/distribution.hpp"

namespace expectile {

/// Two-sided map at a point together with its two ingredients.
struct MapEvaluation {
  double x;
  double value;  ///< two-sided map output
  double h;      ///< first-order-condition residual at x
  double gamma;  ///< tail weight alpha P(X > x) + (1 - alpha) P(X <= x)
};

/// Asymmetric quadratic loss (1 - a) E(X - x)_-^2 + a E(X - x)_+^2, whose
/// minimizer is the expectile. Throws UnsupportedOracle when the oracle has
/// no second partial moments.
double loss(AlphaLevel alpha, double x, const DistributionOracle& d);

/// a E(X - x)_+ - (1 - a) E(X - x)_-. Nonincreasing in x, zero exactly at
/// the expectile.
double foc_residual(AlphaLevel alpha, double x, const DistributionOracle& d);

/// a P(X > x) + (1 - a) P(X <= x), always within [min(a, 1-a), max(a, 1-a)].
double tail_weight(AlphaLevel alpha, double x, const DistributionOracle& d);

/// One-sided map: E X + (2a - 1)/(1 - a) E(X - x)_+ below one half,
/// E X + (2a - 1)/a E(X - x)_- above, and E X at one half. A contraction with
/// constant `one_sided_contraction(alpha)`.
double one_sided_map(AlphaLevel alpha, double x, const DistributionOracle& d);

/// Lipschitz constant of the one-sided map.
double one_sided_contraction(AlphaLevel alpha);

/// Two-sided (weighted average) map, evaluated as x + h(x) / gamma(x).
double two_sided_map(AlphaLevel alpha, double x, const DistributionOracle& d);

MapEvaluation evaluate_two_sided(AlphaLevel alpha, double x,
                                 const DistributionOracle& d);

/// The two-sided map as a ratio of weighted tail expectations and tail
/// weights. Same function as `two_sided_map`; kept for cross-checking.
double two_sided_map_quotient(AlphaLevel alpha, double x,
                              const DistributionOracle& d);

/// The two-sided map in the recursive form
/// ((2a-1) E[X 1{X>x}] + (1-a) E X) / ((2a-1) P(X > x) + 1 - a).
double two_sided_map_recursive(AlphaLevel alpha, double x,
                               const DistributionOracle& d);

}  // namespace expectile
