#include "expectile/solve.hpp"

#include "expectile/empirical.hpp"
#include "expectile/errors.hpp"
#include "expectile/sample_solvers.hpp"

namespace expectile {
namespace {

using SampleSolver = ExpectileResult (*)(AlphaLevel,
                                         const EmpiricalDistribution&, double,
                                         const SolverConfig&);

ExpectileResult solve_sample(Method method, SampleSolver solver,
                             AlphaLevel alpha, const DistributionOracle& d,
                             double x0, const SolverConfig& cfg) {
  const auto* sample = dynamic_cast<const EmpiricalDistribution*>(&d);
  if (sample == nullptr) {
    throw UnsupportedOracle(std::string(to_string(method)) +
                            " needs an empirical sample");
  }
  if (alpha.is_half() || detail::single_point_support(d)) {
    return detail::mean_shortcut(alpha, d, x0, method, cfg);
  }
  if (alpha.below_half()) return solver(alpha, *sample, x0, cfg);
  const EmpiricalDistribution negated = sample->negated();
  return reflect_result(solver(alpha.complement(), negated, -x0, cfg), alpha);
}

}  // namespace

ExpectileResult solve(Method method, AlphaLevel alpha,
                      const DistributionOracle& d, double x0,
                      const SolverConfig& cfg) {
  switch (method) {
    case Method::one_sided:
      return solve_one_sided(alpha, d, x0, cfg);
    case Method::two_sided:
      return solve_two_sided(alpha, d, x0, cfg);
    case Method::bisection:
      return solve_bisection(alpha, d, cfg);
    case Method::sample_one_sided:
      return solve_sample(method, solve_sample_one_sided, alpha, d, x0, cfg);
    case Method::sample_two_sided:
      return solve_sample(method, solve_sample_two_sided, alpha, d, x0, cfg);
  }
  throw InvalidParameter("unknown method");
}

}  // namespace expectile
