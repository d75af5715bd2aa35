#include "expectile/sample_solvers.hpp"

#include <cmath>
#include <limits>

#include "expectile/errors.hpp"
#include "expectile/maps.hpp"

namespace expectile {
namespace {

void require_lower_branch(AlphaLevel alpha) {
  if (!alpha.below_half()) {
    throw AlphaBranchMismatch(
        "sample solvers need alpha < 1/2; reflect the sample first");
  }
}

}  // namespace

PartitionState partition_at(const EmpiricalDistribution& d, double x) {
  const std::size_t k = d.count_at_or_below(x);
  return {k, d.tail_sum(k)};
}

double sample_two_sided_map(AlphaLevel alpha, const EmpiricalDistribution& d,
                            double x) {
  const double a = alpha.value();
  const auto [k, upper_sum] = partition_at(d, x);
  const auto lower_count = static_cast<double>(k);
  const double upper_count = static_cast<double>(d.size()) - lower_count;
  return (a * upper_sum + (1.0 - a) * d.head_sum(k)) /
         (a * upper_count + (1.0 - a) * lower_count);
}

double sample_one_sided_map(AlphaLevel alpha, const EmpiricalDistribution& d,
                            double x) {
  require_lower_branch(alpha);
  const double a = alpha.value();
  const auto n = static_cast<double>(d.size());
  const auto [k, upper_sum] = partition_at(d, x);
  const double upper_count = n - static_cast<double>(k);
  return d.mean() +
         (2.0 * a - 1.0) / (n * (1.0 - a)) * (upper_sum - upper_count * x);
}

double stable_partition_candidate(AlphaLevel alpha,
                                  const EmpiricalDistribution& d,
                                  const PartitionState& p) {
  const double a = alpha.value();
  const auto n = static_cast<double>(d.size());
  const double upper_count = n - static_cast<double>(p.k);
  return ((2.0 * a - 1.0) * p.tail_sum + (1.0 - a) * d.total()) /
         (n * (1.0 - a) + upper_count * (2.0 * a - 1.0));
}

ExpectileResult solve_sample_one_sided(AlphaLevel alpha,
                                       const EmpiricalDistribution& d,
                                       double x0, const SolverConfig& cfg) {
  require_lower_branch(alpha);
  cfg.validate();
  if (detail::single_point_support(d)) {
    return detail::mean_shortcut(alpha, d, x0, Method::sample_one_sided, cfg);
  }
  const auto values = d.values();
  const std::size_t n = d.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::optional<IterationTrace> trace;
  if (cfg.record_trace) {
    trace = IterationTrace{Method::sample_one_sided, {}, {}};
    trace->push(x0, foc_residual(alpha, x0, d));
  }

  double x = x0;
  double residual = 0.0;
  for (std::size_t i = 1; i <= cfg.max_iterations; ++i) {
    const double next = sample_one_sided_map(alpha, d, x);
    residual = foc_residual(alpha, next, d);
    if (trace) trace->push(next, residual);

    // The map is linear on the closed cell [z_k, z_{k+1}], so a candidate
    // inside it is a fixed point.
    const PartitionState p = partition_at(d, next);
    const double candidate = stable_partition_candidate(alpha, d, p);
    const double cell_lo = p.k > 0 ? values[p.k - 1] : -kInf;
    const double cell_hi = p.k < n ? values[p.k] : kInf;
    if (candidate >= cell_lo && candidate <= cell_hi) {
      const double candidate_residual = foc_residual(alpha, candidate, d);
      if (trace && candidate != next) trace->push(candidate, candidate_residual);
      return {candidate, alpha, i, Termination::finite_termination,
              candidate_residual, std::move(trace)};
    }

    const bool done =
        detail::should_stop(x, next, residual, d.mean(), cfg.tolerance);
    x = next;
    if (done) {
      return {x, alpha, i, Termination::tolerance_met, residual, std::move(trace)};
    }
  }
  return {x, alpha, cfg.max_iterations, Termination::max_iterations_hit,
          residual, std::move(trace)};
}

ExpectileResult solve_sample_two_sided(AlphaLevel alpha,
                                       const EmpiricalDistribution& d,
                                       double x0, const SolverConfig& cfg) {
  require_lower_branch(alpha);
  cfg.validate();
  if (detail::single_point_support(d)) {
    return detail::mean_shortcut(alpha, d, x0, Method::sample_two_sided, cfg);
  }

  std::optional<IterationTrace> trace;
  if (cfg.record_trace) {
    trace = IterationTrace{Method::sample_two_sided, {}, {}};
    trace->push(x0, foc_residual(alpha, x0, d));
  }

  const std::size_t step_limit = std::min(cfg.max_iterations, d.size() + 1);
  double x = x0;
  std::size_t cell = d.count_at_or_below(x0);
  double residual = foc_residual(alpha, x0, d);
  for (std::size_t i = 1; i <= step_limit; ++i) {
    const double next = sample_two_sided_map(alpha, d, x);
    const std::size_t next_cell = d.count_at_or_below(next);
    const double next_residual = foc_residual(alpha, next, d);
    if (trace) trace->push(next, next_residual);

    // next is the root of the linear residual piece of x's cell; inside the
    // closed cell it is the expectile (right end included for e in Z).
    const double cell_hi =
        cell < d.size() ? d.values()[cell] : std::numeric_limits<double>::infinity();
    if (next_cell == cell || next == cell_hi) {
      return {next, alpha, i, Termination::finite_termination, next_residual,
              std::move(trace)};
    }
    // After the first step iterates can only move down. An upward move means
    // rounding pushed an iterate across a sample point that equals the
    // expectile; both neighbours then agree with it to rounding.
    if (i >= 2 && next_cell > cell) {
      const bool keep_next = std::abs(next_residual) <= std::abs(residual);
      return {keep_next ? next : x, alpha, i, Termination::tolerance_met,
              keep_next ? next_residual : residual, std::move(trace)};
    }
    x = next;
    cell = next_cell;
    residual = next_residual;
  }
  return {x, alpha, step_limit, Termination::max_iterations_hit, residual,
          std::move(trace)};
}

}  // namespace expectile
