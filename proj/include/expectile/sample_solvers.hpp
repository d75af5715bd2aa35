#pragma once

#include <cstddef>

#include "expectile/alpha.hpp"
#include "expectile/empirical.hpp"
#include "expectile/solvers.hpp"

namespace expectile {

/// Split of a sample at a point x: the k values <= x and the sum of the rest.
struct PartitionState {
  std::size_t k;
  double tail_sum;
};

PartitionState partition_at(const EmpiricalDistribution& d, double x);

/// Two-sided map of the empirical distribution,
/// (a S_hi + (1 - a) S_lo) / (a (N - k) + (1 - a) k).
/// Constant on every cell [z_n, z_{n+1}) between distinct sample values.
double sample_two_sided_map(AlphaLevel alpha, const EmpiricalDistribution& d,
                            double x);

/// One-sided map of the empirical distribution for alpha < 1/2,
/// zbar + (2a - 1) / (N (1 - a)) (S_hi - (N - k) x). Piecewise linear,
/// increasing, and equal to zbar from z_N on.
/// Throws AlphaBranchMismatch for alpha >= 1/2.
double sample_one_sided_map(AlphaLevel alpha, const EmpiricalDistribution& d,
                            double x);

/// Closed-form expectile assuming the upper tail {z > e} has the N - k
/// largest values: ((2a-1) tail + (1-a) N zbar) / (N (1-a) + (N-k)(2a-1)).
double stable_partition_candidate(AlphaLevel alpha,
                                  const EmpiricalDistribution& d,
                                  const PartitionState& p);

/// One-sided iteration that stops as soon as the closed-form candidate of
/// the current partition lies in the closed cell [z_k, z_{k+1}] of that
/// partition; the candidate is then the exact sample expectile.
/// Throws AlphaBranchMismatch for alpha >= 1/2.
ExpectileResult solve_sample_one_sided(AlphaLevel alpha,
                                       const EmpiricalDistribution& d,
                                       double x0, const SolverConfig& cfg);

/// Two-sided iteration on the piecewise-constant map. Two consecutive
/// iterates in the same cell identify the exact sample expectile; otherwise
/// the iterate drops at least one cell, so at most N + 1 steps are taken.
/// Throws AlphaBranchMismatch for alpha >= 1/2.
ExpectileResult solve_sample_two_sided(AlphaLevel alpha,
                                       const EmpiricalDistribution& d,
                                       double x0, const SolverConfig& cfg);

}  // namespace expectile
