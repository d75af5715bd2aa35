#pragma once

#include "expectile/alpha.hpp"
#include "expectile/distribution.hpp"
#include "expectile/solvers.hpp"

namespace expectile {

/// Runs `method` for any alpha: alpha = 1/2 returns the mean directly for the
/// fixed-point methods, and the sample methods reflect the sample for
/// alpha > 1/2. The sample methods throw UnsupportedOracle unless `d` is an
/// EmpiricalDistribution. `x0` is ignored by bisection.
ExpectileResult solve(Method method, AlphaLevel alpha,
                      const DistributionOracle& d, double x0,
                      const SolverConfig& cfg);

}  // namespace expectile
