// expectile: compute, trace and benchmark expectiles from the command line.
//
//   expectile compute --input data.txt --alpha 1/6 --method all
//   expectile trace   --input data.txt --alpha 0.125 --method sample_two_sided --x0 6 --format csv
//   expectile bench   --dist normal:2,6 --samples 1000 --seed 42 --alpha 0.1,0.25,0.75

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "expectile/cli/commands.hpp"

namespace {

using expectile::cli::RunSpec;

struct RawOptions {
  std::string input;
  std::string dist;
  std::string alpha = "0.5";
  std::string method = "all";
  std::string x0 = "mean";
  std::string format = "json";
  double tol = 1e-12;
  std::size_t max_iter = 10'000;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t curve_points = 201;
  bool curve = false;
};

void add_common(CLI::App* cmd, RawOptions& o) {
  auto* input = cmd->add_option("--input", o.input,
                                "Sample file: numbers, one per line or comma-separated");
  auto* dist = cmd->add_option("--dist", o.dist,
                               "Analytic distribution: normal:MU,SIGMA | uniform:A,B | point:C");
  input->excludes(dist);
  cmd->add_option("--alpha", o.alpha, "Comma-separated levels in (0,1); P/Q allowed")
      ->capture_default_str();
  cmd->add_option("--method", o.method,
                  "one_sided | two_sided | bisection | sample_one_sided | "
                  "sample_two_sided | all")
      ->capture_default_str();
  cmd->add_option("--x0", o.x0, "Starting point: mean | quantile | VALUE")
      ->capture_default_str();
  cmd->add_option("--tol", o.tol, "Relative stopping tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap per solve")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "json | csv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", o.seed, "Seed for synthetic samples");
}

RunSpec to_spec(const CLI::App& cmd, const RawOptions& o) {
  RunSpec spec;
  if (cmd.count("--input") > 0) spec.input_path = o.input;
  if (cmd.count("--dist") > 0) spec.dist_spec = o.dist;
  spec.alphas = expectile::cli::parse_alpha_list(o.alpha);
  if (o.method != "all") spec.method = expectile::parse_method(o.method);
  spec.x0 = expectile::cli::parse_start_point(o.x0);
  spec.format = o.format == "csv" ? expectile::cli::OutputFormat::csv
                                  : expectile::cli::OutputFormat::json;
  spec.solver.tolerance = o.tol;
  spec.solver.max_iterations = o.max_iter;
  if (cmd.count("--seed") > 0) spec.seed = o.seed;
  spec.samples = o.samples;
  spec.curve = o.curve;
  spec.curve_points = o.curve_points;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expectiles by fixed-point iteration"};
  app.require_subcommand(1);

  RawOptions o;
  auto* compute = app.add_subcommand("compute", "Compute expectiles");
  auto* trace = app.add_subcommand("trace", "Emit iteration traces or map curves");
  auto* bench = app.add_subcommand("bench", "Compare all methods on a seeded sample");
  for (auto* cmd : {compute, trace, bench}) add_common(cmd, o);
  trace->add_flag("--curve", o.curve, "Emit the sampled map over the data range");
  trace->add_option("--curve-points", o.curve_points, "Number of curve samples")
      ->capture_default_str()
      ->check(CLI::Range(2, 1'000'000));
  bench->add_option("--samples", o.samples, "Synthetic sample size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  RunSpec spec;
  try {
    spec = to_spec(*chosen, o);
  } catch (const expectile::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return expectile::cli::kExitUsage;
  }

  if (chosen == compute) return expectile::cli::cmd_compute(spec, std::cout, std::cerr);
  if (chosen == trace) return expectile::cli::cmd_trace(spec, std::cout, std::cerr);
  return expectile::cli::cmd_bench(spec, std::cout, std::cerr);
}
