#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "expectile/alpha.hpp"
#include "expectile/distribution.hpp"

namespace expectile {

enum class Method {
  one_sided,
  two_sided,
  bisection,
  sample_one_sided,
  sample_two_sided,
};

enum class Termination {
  tolerance_met,
  finite_termination,
  max_iterations_hit,
};

std::string_view to_string(Method m);
std::string_view to_string(Termination t);
/// Throws InvalidParameter for unknown names.
Method parse_method(std::string_view name);

struct SolverConfig {
  /// Relative step threshold; also bounds the residual at the stopping point.
  double tolerance = 1e-12;
  std::size_t max_iterations = 10'000;
  bool record_trace = false;

  /// Throws InvalidParameter.
  void validate() const;
};

/// Iterates x_0, x_1, ... with the FOC residual at each of them.
struct IterationTrace {
  Method method;
  std::vector<double> iterates;
  std::vector<double> residuals;

  void push(double x, double residual) {
    iterates.push_back(x);
    residuals.push_back(residual);
  }
};

struct ExpectileResult {
  double value;
  AlphaLevel alpha;
  std::size_t iterations;
  Termination termination;
  double foc_residual;
  std::optional<IterationTrace> trace;
};

/// Fixed-point iteration of the one-sided map from x0. Converges globally
/// at the geometric rate `one_sided_contraction(alpha)`. Both branches of
/// the map are iterated directly.
ExpectileResult solve_one_sided(AlphaLevel alpha, const DistributionOracle& d,
                                double x0, const SolverConfig& cfg);

/// Fixed-point iteration of the two-sided map from x0. Below one half every
/// iterate after x0 sits at or above the expectile and the sequence is
/// nonincreasing; above one half the problem is reflected.
ExpectileResult solve_two_sided(AlphaLevel alpha, const DistributionOracle& d,
                                double x0, const SolverConfig& cfg);

/// Bisection on the sign of the FOC residual. Uses the support as initial
/// bracket when known, otherwise mean +- w with w = 1, 2, 4, ...
/// Throws BracketingFailed after 200 doublings without a sign change.
ExpectileResult solve_bisection(AlphaLevel alpha, const DistributionOracle& d,
                                const SolverConfig& cfg);

using InnerSolver = std::function<ExpectileResult(
    AlphaLevel, const DistributionOracle&, double, const SolverConfig&)>;

/// e_alpha(X) = -e_{1-alpha}(-X): runs `inner` on the negated oracle at
/// level 1 - alpha from -x0 and maps value, trace and residuals back.
ExpectileResult reflect_solve(AlphaLevel alpha, const DistributionOracle& d,
                              double x0, const SolverConfig& cfg,
                              const InnerSolver& inner);

/// Maps a result computed for -X at level 1 - alpha back to X at alpha.
ExpectileResult reflect_result(ExpectileResult r, AlphaLevel alpha);

namespace detail {

/// Dual stopping rule shared by the iterative solvers.
bool should_stop(double previous, double next, double residual_next,
                 double mean, double tolerance);

/// True when the support is a single point, so the expectile is that point
/// for every alpha.
bool single_point_support(const DistributionOracle& d);

/// Returns the mean after one step; used at alpha = 1/2 and for
/// single-point supports.
ExpectileResult mean_shortcut(AlphaLevel alpha, const DistributionOracle& d,
                              double x0, Method method,
                              const SolverConfig& cfg);

}  // namespace detail

}  // namespace expectile
