#include "expectile/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "expectile/cli/output.hpp"
#include "expectile/cli/synthetic.hpp"
#include "expectile/maps.hpp"
#include "expectile/solve.hpp"
#include "json.hpp"

namespace expectile::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 42;

struct Run {
  AlphaLevel alpha;
  Method method;
  double x0;
  ExpectileResult result;
};

std::string_view policy_name(StartPolicy p) {
  switch (p) {
    case StartPolicy::mean: return "mean";
    case StartPolicy::quantile: return "quantile";
    case StartPolicy::explicit_value: return "explicit";
  }
  return "unknown";
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const EmptySample& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NonFiniteDatum& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

double quantile_of(const DistributionOracle& d, double p) {
  if (const auto* sample = dynamic_cast<const EmpiricalDistribution*>(&d)) {
    return sample->lower_quantile(p);
  }
  double lo = 0.0;
  double hi = 0.0;
  if (const auto s = d.support()) {
    lo = s->lower;
    hi = s->upper;
    if (lo == hi) return lo;
  } else {
    double half_width = 1.0;
    while (!(d.cdf(d.mean() - half_width) < p &&
             d.cdf(d.mean() + half_width) >= p)) {
      half_width *= 2.0;
    }
    lo = d.mean() - half_width;
    hi = d.mean() + half_width;
  }
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (d.cdf(mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::vector<Run> run_all(const RunSpec& spec, const DistributionOracle& d,
                         const SolverConfig& cfg) {
  std::vector<Run> runs;
  const auto methods = methods_for(spec, d);
  for (const AlphaLevel alpha : spec.alphas) {
    const double x0 = resolve_start(spec.x0, alpha, d);
    for (const Method m : methods) {
      runs.push_back({alpha, m, x0, solve(m, alpha, d, x0, cfg)});
    }
  }
  return runs;
}

bool any_capped(const std::vector<Run>& runs, std::ostream& err) {
  bool capped = false;
  for (const Run& r : runs) {
    if (r.result.termination == Termination::max_iterations_hit) {
      err << "warning: " << to_string(r.method) << " at alpha="
          << format_number(r.alpha.value()) << " hit the iteration cap\n";
      capped = true;
    }
  }
  return capped;
}

double agreement_scale(double value, double mean) {
  return 1.0 + std::abs(value) + std::abs(mean);
}

// Largest spread between methods at one alpha, relative to the agreement
// scale. Runs are grouped by consecutive equal alpha.
double worst_relative_spread(const std::vector<Run>& runs, double mean) {
  double worst = 0.0;
  for (std::size_t i = 0; i < runs.size();) {
    std::size_t j = i;
    double lo = runs[i].result.value;
    double hi = lo;
    while (j < runs.size() && runs[j].alpha == runs[i].alpha) {
      lo = std::min(lo, runs[j].result.value);
      hi = std::max(hi, runs[j].result.value);
      ++j;
    }
    const double scale =
        agreement_scale(std::max(std::abs(lo), std::abs(hi)), mean);
    worst = std::max(worst, (hi - lo) / scale);
    i = j;
  }
  return worst;
}

Json base_record(const Run& r, const RunSpec& spec) {
  Json j;
  j["alpha"] = round_significant(r.alpha.value());
  j["method"] = to_string(r.method);
  j["value"] = round_significant(r.result.value);
  j["iterations"] = r.result.iterations;
  j["termination"] = to_string(r.result.termination);
  j["foc_residual"] = round_significant(r.result.foc_residual);
  j["x0_policy"] = policy_name(spec.x0.policy);
  j["x0"] = round_significant(r.x0);
  return j;
}

std::vector<std::string> base_fields(const Run& r, const RunSpec& spec) {
  return {format_number(r.alpha.value()),
          std::string(to_string(r.method)),
          format_number(r.result.value),
          std::to_string(r.result.iterations),
          std::string(to_string(r.result.termination)),
          format_number(r.result.foc_residual),
          std::string(policy_name(spec.x0.policy)),
          format_number(r.x0)};
}

const std::vector<std::string> kBaseHeader = {
    "alpha",       "method",       "value",     "iterations",
    "termination", "foc_residual", "x0_policy", "x0"};

std::pair<double, double> curve_range(const DistributionOracle& d) {
  if (const auto s = d.support(); s && s->lower < s->upper) {
    return {s->lower, s->upper};
  }
  double spread = 1.0;
  if (const auto m = d.second_partial_moments(d.mean())) {
    const double sd = std::sqrt(m->upper + m->lower);
    if (sd > 0.0) spread = 4.0 * sd;
  }
  return {d.mean() - spread, d.mean() + spread};
}

// One-sided methods plot the map itself, two-sided ones the increment
// psi(x) - x, bisection the residual it brackets.
double curve_value(Method m, AlphaLevel alpha, double x,
                   const DistributionOracle& d) {
  switch (m) {
    case Method::one_sided:
    case Method::sample_one_sided:
      return one_sided_map(alpha, x, d);
    case Method::two_sided:
    case Method::sample_two_sided:
      return two_sided_map(alpha, x, d) - x;
    case Method::bisection:
      return foc_residual(alpha, x, d);
  }
  return 0.0;
}

}  // namespace

StartPoint parse_start_point(std::string_view text) {
  if (text == "mean") return {StartPolicy::mean, 0.0};
  if (text == "quantile") return {StartPolicy::quantile, 0.0};
  double v = 0.0;
  if (!parse_real(text, v) || !std::isfinite(v)) {
    throw InvalidParameter("x0 must be 'mean', 'quantile' or a finite number");
  }
  return {StartPolicy::explicit_value, v};
}

Source load_source(const RunSpec& spec) {
  if (spec.input_path) return read_sample_file(*spec.input_path);
  if (spec.dist_spec) return parse_distribution_spec(*spec.dist_spec);
  throw InvalidSpec("either an input file or a distribution spec is required");
}

std::vector<Method> methods_for(const RunSpec& spec,
                                const DistributionOracle& d) {
  if (spec.method) return {*spec.method};
  std::vector<Method> methods = {Method::one_sided, Method::two_sided,
                                 Method::bisection};
  if (dynamic_cast<const EmpiricalDistribution*>(&d) != nullptr) {
    methods.push_back(Method::sample_one_sided);
    methods.push_back(Method::sample_two_sided);
  }
  return methods;
}

double resolve_start(const StartPoint& x0, AlphaLevel alpha,
                     const DistributionOracle& d) {
  switch (x0.policy) {
    case StartPolicy::mean: return d.mean();
    case StartPolicy::quantile: return quantile_of(d, alpha.value());
    case StartPolicy::explicit_value: return x0.value;
  }
  return d.mean();
}

int cmd_compute(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Source source = load_source(spec);
    const DistributionOracle& d = as_oracle(source);
    SolverConfig cfg = spec.solver;
    cfg.record_trace = false;
    const std::vector<Run> runs = run_all(spec, d, cfg);

    if (spec.format == OutputFormat::json) {
      Json records = Json::array();
      for (const Run& r : runs) records.push_back(base_record(r, spec));
      out << records.dump(2) << '\n';
    } else {
      out << csv_row(kBaseHeader);
      for (const Run& r : runs) out << csv_row(base_fields(r, spec));
    }

    int status = any_capped(runs, err) ? kExitNotConverged : kExitOk;
    if (!spec.method) {
      const double spread = worst_relative_spread(runs, d.mean());
      if (spread > kAgreementTolerance) {
        err << "error: methods disagree (relative spread "
            << format_number(spread) << ")\n";
        status = kExitNotConverged;
      }
    }
    return status;
  });
}

int cmd_trace(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Source source = load_source(spec);
    const DistributionOracle& d = as_oracle(source);
    SolverConfig cfg = spec.solver;
    cfg.record_trace = true;
    const std::vector<Run> runs = run_all(spec, d, cfg);

    const auto [lo, hi] = curve_range(d);
    const std::size_t points = std::max<std::size_t>(spec.curve_points, 2);
    const auto curve_x = [&, lo = lo, hi = hi](std::size_t i) {
      return lo + (hi - lo) * static_cast<double>(i) /
                      static_cast<double>(points - 1);
    };

    if (spec.format == OutputFormat::json) {
      Json records = Json::array();
      for (const Run& r : runs) {
        Json j = base_record(r, spec);
        Json rows = Json::array();
        const IterationTrace& t = *r.result.trace;
        for (std::size_t i = 0; i < t.iterates.size(); ++i) {
          rows.push_back({{"iteration", i},
                          {"x", round_significant(t.iterates[i])},
                          {"residual", round_significant(t.residuals[i])}});
        }
        j["rows"] = std::move(rows);
        if (spec.curve) {
          Json curve = Json::array();
          for (std::size_t i = 0; i < points; ++i) {
            const double x = curve_x(i);
            curve.push_back(
                {{"x", round_significant(x)},
                 {"value",
                  round_significant(curve_value(r.method, r.alpha, x, d))}});
          }
          j["curve"] = std::move(curve);
        }
        records.push_back(std::move(j));
      }
      out << records.dump(2) << '\n';
    } else if (spec.curve) {
      out << csv_row({"alpha", "method", "x", "value"});
      for (const Run& r : runs) {
        for (std::size_t i = 0; i < points; ++i) {
          const double x = curve_x(i);
          out << csv_row({format_number(r.alpha.value()),
                          std::string(to_string(r.method)), format_number(x),
                          format_number(curve_value(r.method, r.alpha, x, d))});
        }
      }
    } else {
      out << csv_row({"alpha", "method", "iteration", "x", "residual"});
      for (const Run& r : runs) {
        const IterationTrace& t = *r.result.trace;
        for (std::size_t i = 0; i < t.iterates.size(); ++i) {
          out << csv_row({format_number(r.alpha.value()),
                          std::string(to_string(r.method)), std::to_string(i),
                          format_number(t.iterates[i]),
                          format_number(t.residuals[i])});
        }
      }
    }
    return any_capped(runs, err) ? kExitNotConverged : kExitOk;
  });
}

int cmd_bench(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::optional<std::uint64_t> seed;
    std::optional<EmpiricalDistribution> sample;
    if (spec.input_path) {
      sample = read_sample_file(*spec.input_path);
    } else if (spec.dist_spec) {
      seed = spec.seed.value_or(kDefaultSeed);
      const AnalyticDistribution family =
          parse_distribution_spec(*spec.dist_spec);
      sample = EmpiricalDistribution::from_data(
          draw_sample(family, spec.samples, *seed));
    } else {
      throw InvalidSpec("either an input file or a distribution spec is required");
    }

    RunSpec all = spec;
    all.method.reset();
    SolverConfig cfg = spec.solver;
    cfg.record_trace = false;
    const std::vector<Run> runs = run_all(all, *sample, cfg);

    // Bisection is the reference; deltas are absolute deviations from it.
    std::vector<double> deltas(runs.size(), 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const Run* reference = nullptr;
      for (const Run& r : runs) {
        if (r.alpha == runs[i].alpha && r.method == Method::bisection) {
          reference = &r;
        }
      }
      deltas[i] = std::abs(runs[i].result.value - reference->result.value);
      worst = std::max(worst, deltas[i] / agreement_scale(reference->result.value,
                                                          sample->mean()));
    }

    if (spec.format == OutputFormat::json) {
      Json records = Json::array();
      for (std::size_t i = 0; i < runs.size(); ++i) {
        Json j = base_record(runs[i], spec);
        j["delta"] = round_significant(deltas[i]);
        j["samples"] = sample->size();
        j["seed"] = seed ? Json(*seed) : Json(nullptr);
        records.push_back(std::move(j));
      }
      out << records.dump(2) << '\n';
    } else {
      std::vector<std::string> header = kBaseHeader;
      header.insert(header.end(), {"delta", "samples", "seed"});
      out << csv_row(header);
      for (std::size_t i = 0; i < runs.size(); ++i) {
        std::vector<std::string> fields = base_fields(runs[i], spec);
        fields.push_back(format_number(deltas[i]));
        fields.push_back(std::to_string(sample->size()));
        fields.push_back(seed ? std::to_string(*seed) : std::string());
        out << csv_row(fields);
      }
    }

    // Expectiles are nondecreasing in alpha; check each method separately.
    bool monotone = true;
    for (const Method m : methods_for(all, *sample)) {
      std::vector<std::pair<double, double>> curve;
      for (const Run& r : runs) {
        if (r.method == m) curve.emplace_back(r.alpha.value(), r.result.value);
      }
      std::sort(curve.begin(), curve.end());
      for (std::size_t i = 1; i < curve.size(); ++i) {
        const double slack = kAgreementTolerance *
                             agreement_scale(curve[i].second, sample->mean());
        if (curve[i].second < curve[i - 1].second - slack) monotone = false;
      }
    }
    std::size_t max_iterations = 0;
    for (const Run& r : runs) {
      max_iterations = std::max(max_iterations, r.result.iterations);
    }
    err << fmt::format(
        "bench: samples={} seed={} max_relative_delta={} "
        "max_iterations={} monotone_in_alpha={}\n",
        sample->size(), seed ? std::to_string(*seed) : "none",
        format_number(worst), max_iterations, monotone ? "yes" : "no");

    int status = any_capped(runs, err) ? kExitNotConverged : kExitOk;
    if (worst > kAgreementTolerance) {
      err << "error: methods disagree with bisection\n";
      status = kExitNotConverged;
    }
    return status;
  });
}

}  // namespace expectile::cli
