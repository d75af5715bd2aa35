// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "expectile/analytic.hpp"
#include "expectile/cli/ingest.hpp"
#include "expectile/cli/synthetic.hpp"
#include "expectile/empirical.hpp"
#include "expectile/errors.hpp"
#include "expectile/maps.hpp"
#include "expectile/sample_solvers.hpp"
#include "expectile/solve.hpp"
#include "oracles.hpp"

using namespace expectile;
namespace ref = expectile::reference;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few violations of a criterion for the report.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void near(double got, double want, double tol, const std::string& what) {
    expect(std::abs(got - want) <= tol,
           what + ": got " + fmt(got) + " want " + fmt(want));
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    if (ok()) return detail_;
    return std::to_string(failures_) + " violation(s): " + notes_;
  }
  void set_detail(std::string d) { detail_ = std::move(d); }

  static std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
  }

  static std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  int failures_ = 0;
  std::string notes_;
  std::string detail_;
};

const std::vector<Method> kAllMethods = {
    Method::one_sided, Method::two_sided, Method::bisection,
    Method::sample_one_sided, Method::sample_two_sided};
const std::vector<Method> kGenericMethods = {Method::one_sided,
                                             Method::two_sided,
                                             Method::bisection};

EmpiricalDistribution sample_of(std::vector<double> v) {
  return EmpiricalDistribution::from_data(std::move(v));
}

SolverConfig traced() {
  SolverConfig cfg;
  cfg.record_trace = true;
  return cfg;
}

std::vector<double> random_data(std::mt19937_64& rng, std::size_t n) {
  // Mix of continuous data and tied integer data.
  if (rng() % 3 == 0) return ref::integer_sample(rng, n, -20, 20);
  std::uniform_real_distribution<double> centre(-50.0, 50.0);
  std::uniform_real_distribution<double> width(0.1, 40.0);
  const double c = centre(rng);
  const double w = width(rng);
  return ref::uniform_sample(rng, n, c - w, c + w);
}

Check golden_three_points() {
  Check c;
  const auto d = sample_of({1, 2, 7});
  const AlphaLevel a(1.0 / 6.0);
  const auto start = Clock::now();
  const auto from_mean = solve_one_sided(a, d, 10.0 / 3.0, traced());
  const auto from_one = solve_one_sided(a, d, 1.0, traced());
  const double elapsed = seconds_since(start);
  const std::vector<double> want_mean = {106.0 / 45, 1414.0 / 675,
                                         20506.0 / 10125};
  const std::vector<double> want_one = {22.0 / 15, 386.0 / 225,
                                        6238.0 / 3375};
  const auto& it_mean = from_mean.trace->iterates;
  const auto& it_one = from_one.trace->iterates;
  c.expect(it_mean.size() > 3 && it_one.size() > 3, "trace too short");
  for (std::size_t i = 0; i < 3 && i + 1 < it_mean.size(); ++i) {
    c.near(it_mean[i + 1], want_mean[i], 1e-12, "from 10/3 step " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < 3 && i + 1 < it_one.size(); ++i) {
    c.near(it_one[i + 1], want_one[i], 1e-12, "from 1 step " + std::to_string(i + 1));
  }
  c.near(from_mean.value, 2.0, 1e-10, "final value from 10/3");
  c.near(from_one.value, 2.0, 1e-10, "final value from 1");
  c.expect(elapsed < 1e-3, "runtime " + Check::fmt(elapsed) + " s");
  c.set_detail("iterates within 1e-12, value 2, " +
               std::to_string(static_cast<int>(elapsed * 1e6)) + " us");
  return c;
}

Check golden_four_points_table() {
  Check c;
  const auto d = sample_of({1, 2, 5, 8});
  const AlphaLevel a(0.25);
  const std::vector<std::pair<double, double>> table = {
      {-3.0, 4.0},      {0.999, 4.0},     {1.0, 3.0},      {1.5, 3.0},
      {1.999, 3.0},     {2.0, 11.0 / 4},  {2.75, 11.0 / 4}, {4.999, 11.0 / 4},
      {5.0, 16.0 / 5},  {7.0, 16.0 / 5},  {7.999, 16.0 / 5}, {8.0, 4.0},
      {100.0, 4.0}};
  for (const auto& [x, want] : table) {
    c.near(sample_two_sided_map(a, d, x), want, 1e-14, "map at " + Check::fmt(x));
  }
  for (Method m : kAllMethods) {
    for (double x0 : {d.mean(), 1.0, 8.0, 2.75, -10.0, 30.0}) {
      const auto r = solve(m, a, d, x0, SolverConfig{});
      c.near(r.value, 2.75, 1e-10,
             std::string(to_string(m)) + " from " + Check::fmt(x0));
    }
  }
  c.set_detail("13 table points within 1e-14, 5 methods x 6 starts = 2.75");
  return c;
}

Check golden_four_steps() {
  Check c;
  const auto d = sample_of({1, 2, 3, 6});
  const AlphaLevel a(0.125);
  const auto r = solve_sample_two_sided(a, d, 6.0, traced());
  const std::vector<double> want = {6.0, 3.0, 24.0 / 11, 15.0 / 8, 9.0 / 5};
  c.expect(r.iterations == 4, "iterations " + std::to_string(r.iterations));
  c.expect(r.trace->iterates.size() == want.size(),
           "trace length " + std::to_string(r.trace->iterates.size()));
  for (std::size_t i = 0; i < want.size() && i < r.trace->iterates.size(); ++i) {
    c.near(r.trace->iterates[i], want[i], 1e-14, "step " + std::to_string(i));
  }
  c.near(r.value, 1.8, 1e-14, "final value");
  const std::vector<std::pair<double, double>> table = {
      {0.0, 3.0},        {0.999, 3.0},      {1.0, 9.0 / 5},   {1.8, 9.0 / 5},
      {2.0, 15.0 / 8},   {2.5, 15.0 / 8},   {3.0, 24.0 / 11}, {5.999, 24.0 / 11},
      {6.0, 3.0},        {50.0, 3.0}};
  for (const auto& [x, want_value] : table) {
    c.near(sample_two_sided_map(a, d, x), want_value, 1e-14, "map at " + Check::fmt(x));
  }
  c.set_detail("6 -> 3 -> 24/11 -> 15/8 -> 9/5, table within 1e-14");
  return c;
}

Check finite_termination_bound() {
  Check c;
  std::mt19937_64 rng(20240601);
  const auto start = Clock::now();
  std::size_t worst_ratio_n = 0;
  std::size_t worst_iterations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = ref::random_size(rng, 1, 200);
    const auto data = random_data(rng, n);
    const auto d = sample_of(data);
    const auto& v = d.values();
    std::uniform_real_distribution<double> pick(v.front() - 5.0, v.back() + 5.0);
    const double x0s[] = {d.mean(), v.back(), v.front(), pick(rng)};
    for (double alpha : {0.05, 0.2, 0.45}) {
      const AlphaLevel a(alpha);
      const double exact = ref::exact_sample_expectile(alpha, data);
      for (double x0 : x0s) {
        const auto r = solve_sample_two_sided(a, d, x0, SolverConfig{});
        c.expect(r.iterations <= n + 1,
                 "N=" + std::to_string(n) + " took " + std::to_string(r.iterations));
        c.near(r.value, exact, 1e-10 * ref::scale_of(exact, d.mean()),
               "value N=" + std::to_string(n));
        if (r.iterations > worst_iterations) {
          worst_iterations = r.iterations;
          worst_ratio_n = n;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 5.0, "runtime " + Check::fmt(elapsed) + " s");
  c.set_detail("12000 runs, max iterations " + std::to_string(worst_iterations) +
               " (N=" + std::to_string(worst_ratio_n) + "), " +
               Check::fixed(elapsed, 3) + " s");
  return c;
}

std::vector<std::unique_ptr<DistributionOracle>> distribution_zoo(
    std::mt19937_64& rng) {
  std::vector<std::unique_ptr<DistributionOracle>> zoo;
  zoo.push_back(std::make_unique<AnalyticDistribution>(AnalyticDistribution::normal(0, 1)));
  zoo.push_back(std::make_unique<AnalyticDistribution>(AnalyticDistribution::normal(2, 6)));
  zoo.push_back(std::make_unique<AnalyticDistribution>(AnalyticDistribution::uniform(0, 1)));
  zoo.push_back(std::make_unique<AnalyticDistribution>(AnalyticDistribution::uniform(-3, 5)));
  zoo.push_back(std::make_unique<AnalyticDistribution>(AnalyticDistribution::point_mass(1.5)));
  zoo.push_back(std::make_unique<EmpiricalDistribution>(sample_of({1, 2, 7})));
  zoo.push_back(std::make_unique<EmpiricalDistribution>(sample_of({1, 2, 5, 8})));
  zoo.push_back(std::make_unique<EmpiricalDistribution>(sample_of({1, 2, 3, 6})));
  zoo.push_back(std::make_unique<EmpiricalDistribution>(
      sample_of(ref::uniform_sample(rng, 50, -4.0, 9.0))));
  zoo.push_back(std::make_unique<EmpiricalDistribution>(
      sample_of(ref::integer_sample(rng, 100, -5, 5))));
  return zoo;
}

Check contraction_suite() {
  Check c;
  std::mt19937_64 rng(77);
  const auto zoo = distribution_zoo(rng);
  double worst_excess = -INFINITY;
  for (const auto& d : zoo) {
    for (double alpha : {0.05, 0.2, 0.45, 0.55, 0.8, 0.95}) {
      const AlphaLevel a(alpha);
      const double lip = one_sided_contraction(a);
      std::uniform_real_distribution<double> u(d->mean() - 20.0, d->mean() + 20.0);
      for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        const double lhs = std::abs(one_sided_map(a, x, *d) - one_sided_map(a, y, *d));
        const double bound = lip * std::abs(x - y);
        worst_excess = std::max(worst_excess, lhs - bound);
        c.expect(lhs <= bound + 1e-12, "alpha " + Check::fmt(alpha) + " excess " +
                                           Check::fmt(lhs - bound));
      }
    }
  }
  c.set_detail("60000 pairs, worst excess " + Check::fmt(worst_excess));
  return c;
}

Check overshoot_and_descent() {
  Check c;
  std::mt19937_64 rng(5150);
  const auto zoo = distribution_zoo(rng);
  std::vector<const DistributionOracle*> oracles;
  for (const auto& d : zoo) oracles.push_back(d.get());
  std::vector<EmpiricalDistribution> extra;
  for (int i = 0; i < 200; ++i) {
    extra.push_back(sample_of(random_data(rng, ref::random_size(rng, 1, 120))));
  }
  for (const auto& d : extra) oracles.push_back(&d);
  int traces = 0;
  for (const auto* d : oracles) {
    for (double alpha : {0.01, 0.05, 0.2, 0.35, 0.45, 0.49}) {
      const AlphaLevel a(alpha);
      const double e = solve_bisection(a, *d, SolverConfig{}).value;
      std::uniform_real_distribution<double> u(d->mean() - 30.0, d->mean() + 30.0);
      for (double x0 : {d->mean(), u(rng), u(rng)}) {
        const auto r = solve_two_sided(a, *d, x0, traced());
        const auto& it = r.trace->iterates;
        for (std::size_t i = 1; i < it.size(); ++i) {
          c.expect(it[i] >= e - 1e-10, "iterate " + Check::fmt(it[i]) +
                                           " below expectile " + Check::fmt(e));
          if (i >= 2) {
            c.expect(it[i] <= it[i - 1],
                     "increase " + Check::fmt(it[i - 1]) + " -> " + Check::fmt(it[i]));
          }
        }
        ++traces;
      }
    }
  }
  c.set_detail(std::to_string(traces) + " two-sided traces");
  return c;
}

double relative_spread(const std::vector<double>& values, double mean) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return (*hi - *lo) / ref::scale_of(*hi, mean);
}

Check oracle_equivalence() {
  Check c;
  std::mt19937_64 rng(31337);
  const double alphas[] = {0.01, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 0.99};
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = sample_of(random_data(rng, ref::random_size(rng, 1, 300)));
    const AlphaLevel a(alphas[rng() % std::size(alphas)]);
    std::vector<double> values;
    for (Method m : kAllMethods) values.push_back(solve(m, a, d, d.mean(), SolverConfig{}).value);
    const double spread = relative_spread(values, d.mean());
    worst = std::max(worst, spread);
    c.expect(spread <= 1e-8, "empirical trial " + std::to_string(trial) +
                                 " spread " + Check::fmt(spread));
  }
  const AnalyticDistribution analytic[] = {
      AnalyticDistribution::normal(0, 1), AnalyticDistribution::normal(2, 6),
      AnalyticDistribution::normal(-40, 0.01), AnalyticDistribution::uniform(0, 1),
      AnalyticDistribution::uniform(-7, 3)};
  for (const auto& d : analytic) {
    for (double alpha : alphas) {
      const AlphaLevel a(alpha);
      std::vector<double> values;
      for (Method m : kGenericMethods) values.push_back(solve(m, a, d, d.mean(), SolverConfig{}).value);
      const double spread = relative_spread(values, d.mean());
      worst = std::max(worst, spread);
      c.expect(spread <= 1e-8, "analytic spread " + Check::fmt(spread));
    }
  }
  // Known values for the analytic families.
  const AlphaLevel quarter(0.25);
  c.near(solve_bisection(quarter, analytic[0], SolverConfig{}).value,
         -0.43632656379365158876, 1e-10, "normal(0,1) at 0.25");
  c.near(solve_bisection(AlphaLevel(0.1), analytic[1], SolverConfig{}).value,
         -3.16955267449497, 1e-10, "normal(2,6) at 0.1");
  c.near(solve_bisection(AlphaLevel(0.1), analytic[3], SolverConfig{}).value,
         0.25, 1e-10, "uniform(0,1) at 0.1");
  c.near(solve_bisection(quarter, analytic[3], SolverConfig{}).value,
         (std::sqrt(3.0) - 1.0) / 2.0, 1e-10, "uniform(0,1) at 0.25");

  double worst_grid = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto data = random_data(rng, ref::random_size(rng, 2, 60));
    const double alpha = alphas[rng() % std::size(alphas)];
    const auto d = sample_of(data);
    const double b = solve_bisection(AlphaLevel(alpha), d, SolverConfig{}).value;
    const double g = ref::grid_argmin_loss(alpha, data, d.values().front(),
                                           d.values().back(), 1e-3);
    worst_grid = std::max(worst_grid, std::abs(b - g));
    c.near(b, g, 1e-3, "grid minimizer trial " + std::to_string(trial));
  }
  c.set_detail("545 instances, worst relative spread " + Check::fmt(worst) +
               ", grid gap " + Check::fmt(worst_grid));
  return c;
}

Check reflection_identity() {
  Check c;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> alpha_pick(0.01, 0.99);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const AlphaLevel a(alpha_pick(rng));
    const AlphaLevel b(a.complement());
    double lhs = 0.0;
    double rhs = 0.0;
    double mean = 0.0;
    if (trial % 4 == 3) {
      std::uniform_real_distribution<double> mu(-10, 10);
      std::uniform_real_distribution<double> sigma(0.1, 8);
      const double m = mu(rng);
      const double s = sigma(rng);
      const auto d = AnalyticDistribution::normal(m, s);
      const auto neg = AnalyticDistribution::normal(-m, s);
      lhs = solve(Method::two_sided, a, d, m, SolverConfig{}).value;
      rhs = -solve(Method::two_sided, b, neg, -m, SolverConfig{}).value;
      mean = m;
    } else {
      const auto d = sample_of(random_data(rng, ref::random_size(rng, 1, 150)));
      const auto neg = d.negated();
      const Method m = trial % 2 == 0 ? Method::sample_two_sided : Method::two_sided;
      lhs = solve(m, a, d, d.mean(), SolverConfig{}).value;
      rhs = -solve(m, b, neg, neg.mean(), SolverConfig{}).value;
      mean = d.mean();
    }
    const double gap = std::abs(lhs - rhs) / ref::scale_of(lhs, mean);
    worst = std::max(worst, gap);
    c.expect(gap <= 1e-10, "trial " + std::to_string(trial) + " gap " + Check::fmt(gap));
  }
  c.set_detail("100 cases, worst relative gap " + Check::fmt(worst));
  return c;
}

Check normal_sample_reproduction() {
  Check c;
  const auto start = Clock::now();
  const auto d = sample_of(cli::draw_sample(AnalyticDistribution::normal(2, 6), 1000, 42));
  std::string detail;
  for (double alpha : {0.1, 0.25, 0.75}) {
    const AlphaLevel a(alpha);
    std::vector<double> values;
    for (Method m : kAllMethods) {
      const auto r = solve(m, a, d, d.mean(), traced());
      c.expect(r.termination != Termination::max_iterations_hit,
               std::string(to_string(m)) + " hit the iteration cap");
      values.push_back(r.value);
      if (m == Method::two_sided || m == Method::sample_two_sided) {
        const auto& it = r.trace->iterates;
        const double dir = alpha < 0.5 ? 1.0 : -1.0;  // descending below one half
        for (std::size_t i = 2; i < it.size(); ++i) {
          c.expect(dir * (it[i] - it[i - 1]) <= 0.0,
                   std::string(to_string(m)) + " trace not monotone at step " +
                       std::to_string(i));
        }
      }
    }
    const double spread = relative_spread(values, d.mean());
    c.expect(spread <= 1e-8, "alpha " + Check::fmt(alpha) + " spread " + Check::fmt(spread));
    detail += (detail.empty() ? "" : ", ") + Check::fmt(alpha) + " -> " +
              Check::fixed(values[2], 6);
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "runtime " + Check::fmt(elapsed) + " s");
  c.set_detail(detail + ", " + std::to_string(static_cast<int>(elapsed * 1000)) + " ms");
  return c;
}

Check degenerate_inputs() {
  Check c;
  const auto constant = sample_of(std::vector<double>(7, 0.1));
  const auto single = sample_of({-3.5});
  for (const auto* d : {&constant, &single}) {
    const double want = d->values().front();
    for (double alpha : {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
      for (Method m : kAllMethods) {
        for (double x0 : {want, want + 10.0, want - 3.0}) {
          const auto r = solve(m, AlphaLevel(alpha), *d, x0, SolverConfig{});
          c.expect(r.value == want, std::string(to_string(m)) + " returned " +
                                        Check::fmt(r.value));
          c.expect(r.iterations <= 1, std::string(to_string(m)) + " took " +
                                          std::to_string(r.iterations) + " steps");
        }
      }
    }
  }
  bool empty_rejected = false;
  try {
    (void)EmpiricalDistribution::from_data({});
  } catch (const EmptySample&) {
    empty_rejected = true;
  }
  c.expect(empty_rejected, "empty data not rejected");
  bool empty_file_rejected = false;
  try {
    (void)cli::parse_sample_text("value\n\n");
  } catch (const EmptySample&) {
    empty_file_rejected = true;
  }
  c.expect(empty_file_rejected, "empty input text not rejected");
  c.set_detail("constant and single-point samples, 7 alphas x 5 methods; empty input rejected");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const Criterion criteria[] = {
      {"AC1 golden three-point one-sided iterates", golden_three_points},
      {"AC2 golden four-point map table and solvers", golden_four_points_table},
      {"AC3 golden four-step two-sided sample iteration", golden_four_steps},
      {"AC4 finite termination within N+1 steps", finite_termination_bound},
      {"AC5 one-sided contraction bound", contraction_suite},
      {"AC6 two-sided overshoot and descent", overshoot_and_descent},
      {"AC7 agreement across methods and with loss minimizer", oracle_equivalence},
      {"AC8 reflection identity", reflection_identity},
      {"AC9 seeded normal(2,6) sample reproduction", normal_sample_reproduction},
      {"AC10 degenerate inputs", degenerate_inputs},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", result.ok() ? "PASS" : "FAIL", criterion.name,
                result.detail().c_str());
    if (!result.ok()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
