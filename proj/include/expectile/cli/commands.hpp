#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "expectile/alpha.hpp"
#include "expectile/cli/ingest.hpp"
#include "expectile/solvers.hpp"

namespace expectile::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNotConverged = 3;

/// Relative agreement required between methods (times 1 + |value| + |mean|).
inline constexpr double kAgreementTolerance = 1e-8;

enum class StartPolicy { mean, quantile, explicit_value };

struct StartPoint {
  StartPolicy policy = StartPolicy::mean;
  double value = 0.0;
};

/// "mean", "quantile" or a finite number. Throws InvalidParameter.
StartPoint parse_start_point(std::string_view text);

enum class OutputFormat { json, csv };

struct RunSpec {
  std::optional<std::string> input_path;
  std::optional<std::string> dist_spec;
  std::vector<AlphaLevel> alphas;
  /// Empty means every applicable method.
  std::optional<Method> method;
  StartPoint x0;
  OutputFormat format = OutputFormat::json;
  SolverConfig solver;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;
  bool curve = false;
  std::size_t curve_points = 201;
};

/// Loads the distribution a run spec points at (file or analytic spec).
Source load_source(const RunSpec& spec);

/// Methods run for `spec` on `d`: the requested one, or all that apply.
std::vector<Method> methods_for(const RunSpec& spec,
                                const DistributionOracle& d);

/// Starting point for a run at level `alpha`.
double resolve_start(const StartPoint& x0, AlphaLevel alpha,
                     const DistributionOracle& d);

/// One record {alpha, method, value, iterations, termination, foc_residual}
/// per (alpha, method). Exit 3 when any run hits the iteration cap or, with
/// every method selected, when methods disagree.
int cmd_compute(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Iteration traces (iteration, x, residual) per (alpha, method); with
/// `curve` set, samples of the underlying map over the data range instead.
int cmd_trace(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Draws a seeded synthetic sample (or uses the input file), runs every
/// method over the alpha grid and reports iteration counts and the deviation
/// from bisection.
int cmd_bench(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace expectile::cli
