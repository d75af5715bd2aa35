#include "expectile/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "expectile/errors.hpp"
#include "expectile/maps.hpp"

namespace expectile {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::one_sided: return "one_sided";
    case Method::two_sided: return "two_sided";
    case Method::bisection: return "bisection";
    case Method::sample_one_sided: return "sample_one_sided";
    case Method::sample_two_sided: return "sample_two_sided";
  }
  return "unknown";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::tolerance_met: return "tolerance_met";
    case Termination::finite_termination: return "finite_termination";
    case Termination::max_iterations_hit: return "max_iterations_hit";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::one_sided, Method::two_sided, Method::bisection,
                   Method::sample_one_sided, Method::sample_two_sided}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidParameter("unknown method '" + std::string(name) + "'");
}

void SolverConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InvalidParameter("tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw InvalidParameter("max_iterations must be at least 1");
  }
}

namespace detail {

bool should_stop(double previous, double next, double residual_next,
                 double mean, double tolerance) {
  // A bit-exact repeat is a floating-point fixed point: nothing further can
  // change, so the residual is already at its rounding floor.
  if (next == previous) return true;
  const bool small_step =
      std::abs(next - previous) <= tolerance * std::max(1.0, std::abs(previous));
  const bool small_residual =
      std::abs(residual_next) <= tolerance * (1.0 + std::abs(mean));
  return small_step && small_residual;
}

bool single_point_support(const DistributionOracle& d) {
  const auto s = d.support();
  return s.has_value() && s->lower == s->upper;
}

ExpectileResult mean_shortcut(AlphaLevel alpha, const DistributionOracle& d,
                              double x0, Method method,
                              const SolverConfig& cfg) {
  const auto support = d.support();
  const double mean = support && support->lower == support->upper
                          ? support->lower
                          : d.mean();
  ExpectileResult r{mean, alpha, 1, Termination::finite_termination,
                    foc_residual(alpha, mean, d), std::nullopt};
  if (cfg.record_trace) {
    IterationTrace trace{method, {}, {}};
    trace.push(x0, foc_residual(alpha, x0, d));
    trace.push(mean, r.foc_residual);
    r.trace = std::move(trace);
  }
  return r;
}

}  // namespace detail

namespace {

// With `descending`, iterates after x_1 cannot increase in exact arithmetic;
// an upward step is rounding noise at the fixed point and ends the run.
template <class Step>
ExpectileResult iterate_map(AlphaLevel alpha, const DistributionOracle& d,
                            double x0, const SolverConfig& cfg, Method method,
                            bool descending, Step step) {
  cfg.validate();
  const double mean = d.mean();
  std::optional<IterationTrace> trace;
  if (cfg.record_trace) {
    trace = IterationTrace{method, {}, {}};
    trace->push(x0, foc_residual(alpha, x0, d));
  }

  double x = x0;
  double residual = 0.0;
  for (std::size_t i = 1; i <= cfg.max_iterations; ++i) {
    const double next = step(x);
    if (descending && i >= 2 && next > x) {
      return {x, alpha, i - 1, Termination::tolerance_met, residual,
              std::move(trace)};
    }
    residual = foc_residual(alpha, next, d);
    if (trace) trace->push(next, residual);
    const bool done = detail::should_stop(x, next, residual, mean, cfg.tolerance);
    x = next;
    if (done) {
      return {x, alpha, i, Termination::tolerance_met, residual, std::move(trace)};
    }
  }
  return {x, alpha, cfg.max_iterations, Termination::max_iterations_hit,
          residual, std::move(trace)};
}

}  // namespace

ExpectileResult solve_one_sided(AlphaLevel alpha, const DistributionOracle& d,
                                double x0, const SolverConfig& cfg) {
  if (alpha.is_half() || detail::single_point_support(d)) {
    return detail::mean_shortcut(alpha, d, x0, Method::one_sided, cfg);
  }
  return iterate_map(alpha, d, x0, cfg, Method::one_sided, false,
                     [&](double x) { return one_sided_map(alpha, x, d); });
}

ExpectileResult solve_two_sided(AlphaLevel alpha, const DistributionOracle& d,
                                double x0, const SolverConfig& cfg) {
  if (alpha.is_half() || detail::single_point_support(d)) {
    return detail::mean_shortcut(alpha, d, x0, Method::two_sided, cfg);
  }
  if (alpha.above_half()) {
    return reflect_solve(alpha, d, x0, cfg, solve_two_sided);
  }
  return iterate_map(alpha, d, x0, cfg, Method::two_sided, true,
                     [&](double x) { return two_sided_map(alpha, x, d); });
}

ExpectileResult solve_bisection(AlphaLevel alpha, const DistributionOracle& d,
                                const SolverConfig& cfg) {
  cfg.validate();
  if (detail::single_point_support(d)) {
    return detail::mean_shortcut(alpha, d, d.support()->lower,
                                 Method::bisection, cfg);
  }
  constexpr int kMaxDoublings = 200;
  const auto h = [&](double x) { return foc_residual(alpha, x, d); };

  double lo = 0.0;
  double hi = 0.0;
  if (const auto s = d.support()) {
    lo = s->lower;
    hi = s->upper;
  } else {
    const double center = d.mean();
    double half_width = 1.0;
    int doublings = 0;
    for (;;) {
      lo = center - half_width;
      hi = center + half_width;
      if (h(lo) >= 0.0 && h(hi) <= 0.0) break;
      if (++doublings > kMaxDoublings) {
        throw BracketingFailed("no sign change of the FOC residual found");
      }
      half_width *= 2.0;
    }
  }
  if (!(h(lo) >= 0.0 && h(hi) <= 0.0)) {
    throw BracketingFailed("support bounds do not bracket the FOC root");
  }

  std::optional<IterationTrace> trace;
  if (cfg.record_trace) trace = IterationTrace{Method::bisection, {}, {}};

  std::size_t iterations = 0;
  Termination termination = Termination::tolerance_met;
  while (hi - lo > cfg.tolerance *
                       std::max({1.0, std::abs(lo), std::abs(hi)})) {
    if (iterations == cfg.max_iterations) {
      termination = Termination::max_iterations_hit;
      break;
    }
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double hm = h(mid);
    ++iterations;
    if (trace) trace->push(mid, hm);
    if (hm > 0.0) {
      lo = mid;
    } else if (hm < 0.0) {
      hi = mid;
    } else {
      lo = hi = mid;
    }
  }
  const double value = lo + 0.5 * (hi - lo);
  const double residual = h(value);
  if (trace) trace->push(value, residual);
  return {value, alpha, iterations, termination, residual, std::move(trace)};
}

ExpectileResult reflect_result(ExpectileResult r, AlphaLevel alpha) {
  r.value = -r.value;
  r.alpha = alpha;
  // The FOC residual of -X at level 1 - a and point -x is minus the
  // residual of X at level a and point x.
  r.foc_residual = -r.foc_residual;
  if (r.trace) {
    for (double& x : r.trace->iterates) x = -x;
    for (double& h : r.trace->residuals) h = -h;
  }
  return r;
}

ExpectileResult reflect_solve(AlphaLevel alpha, const DistributionOracle& d,
                              double x0, const SolverConfig& cfg,
                              const InnerSolver& inner) {
  if (!alpha.above_half()) {
    throw AlphaBranchMismatch("reflection is only used for alpha > 1/2");
  }
  const NegatedOracle negated(d);
  return reflect_result(inner(alpha.complement(), negated, -x0, cfg), alpha);
}

}  // namespace expectile
