#include "expectile/analytic.hpp"

#include <cmath>
#include <numbers>

#include "expectile/errors.hpp"

namespace expectile {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double standard_density(double t) {
  return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
}

// erfc keeps both tails accurate far from the mean.
double standard_survival(double t) {
  return 0.5 * std::erfc(t / std::numbers::sqrt2);
}

double standard_cdf(double t) {
  return 0.5 * std::erfc(-t / std::numbers::sqrt2);
}

TailMoments normal_tails(const NormalFamily& f, double x) {
  const double t = (x - f.mu) / f.sigma;
  const double density = standard_density(t);
  const double upper_mass = standard_survival(t);
  const double lower_mass = standard_cdf(t);
  TailMoments m{};
  m.survival = upper_mass;
  m.cdf = lower_mass;
  m.upm = f.sigma * density + (f.mu - x) * upper_mass;
  m.lpm = f.sigma * density + (x - f.mu) * lower_mass;
  m.upe = f.sigma * density + f.mu * upper_mass;
  return m;
}

TailMoments uniform_tails(const UniformFamily& f, double x) {
  const double width = f.b - f.a;
  const double mid = 0.5 * (f.a + f.b);
  TailMoments m{};
  if (x <= f.a) {
    m = {mid - x, 0.0, 1.0, 0.0, mid};
  } else if (x >= f.b) {
    m = {0.0, x - mid, 0.0, 1.0, 0.0};
  } else {
    const double above = f.b - x;
    const double below = x - f.a;
    m.survival = above / width;
    m.cdf = below / width;
    m.upm = above * above / (2.0 * width);
    m.lpm = below * below / (2.0 * width);
    m.upe = (f.b * f.b - x * x) / (2.0 * width);
  }
  return m;
}

TailMoments point_tails(const PointMassFamily& f, double x, bool inclusive) {
  const bool above = inclusive ? f.c >= x : f.c > x;
  TailMoments m{};
  m.upm = f.c > x ? f.c - x : 0.0;
  m.lpm = f.c < x ? x - f.c : 0.0;
  m.survival = above ? 1.0 : 0.0;
  m.cdf = above ? 0.0 : 1.0;
  m.upe = above ? f.c : 0.0;
  return m;
}

}  // namespace

AnalyticDistribution AnalyticDistribution::normal(double mu, double sigma) {
  if (!std::isfinite(mu) || !std::isfinite(sigma) || !(sigma > 0.0)) {
    throw InvalidParameter("normal family needs finite mu and sigma > 0");
  }
  return AnalyticDistribution(NormalFamily{mu, sigma});
}

AnalyticDistribution AnalyticDistribution::uniform(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidParameter("uniform family needs finite a < b");
  }
  return AnalyticDistribution(UniformFamily{a, b});
}

AnalyticDistribution AnalyticDistribution::point_mass(double c) {
  if (!std::isfinite(c)) {
    throw InvalidParameter("point mass location must be finite");
  }
  return AnalyticDistribution(PointMassFamily{c});
}

double AnalyticDistribution::stddev() const {
  return std::visit(
      Overloaded{
          [](const NormalFamily& f) { return f.sigma; },
          [](const UniformFamily& f) { return (f.b - f.a) / std::sqrt(12.0); },
          [](const PointMassFamily&) { return 0.0; },
      },
      family_);
}

double AnalyticDistribution::mean() const {
  return std::visit(
      Overloaded{
          [](const NormalFamily& f) { return f.mu; },
          [](const UniformFamily& f) { return 0.5 * (f.a + f.b); },
          [](const PointMassFamily& f) { return f.c; },
      },
      family_);
}

TailMoments AnalyticDistribution::evaluate(double x) const {
  return std::visit(
      Overloaded{
          [x](const NormalFamily& f) { return normal_tails(f, x); },
          [x](const UniformFamily& f) { return uniform_tails(f, x); },
          [x](const PointMassFamily& f) { return point_tails(f, x, false); },
      },
      family_);
}

// Only the point mass has an atom, so it is the only family where the
// inclusive tails differ.
TailMoments AnalyticDistribution::evaluate_inclusive(double x) const {
  if (const auto* p = std::get_if<PointMassFamily>(&family_)) {
    return point_tails(*p, x, true);
  }
  return evaluate(x);
}

std::optional<SupportBounds> AnalyticDistribution::support() const {
  return std::visit(
      Overloaded{
          [](const NormalFamily&) -> std::optional<SupportBounds> {
            return std::nullopt;
          },
          [](const UniformFamily& f) -> std::optional<SupportBounds> {
            return SupportBounds{f.a, f.b};
          },
          [](const PointMassFamily& f) -> std::optional<SupportBounds> {
            return SupportBounds{f.c, f.c};
          },
      },
      family_);
}

std::optional<SecondPartialMoments> AnalyticDistribution::second_partial_moments(
    double x) const {
  return std::visit(
      Overloaded{
          [x](const NormalFamily& f) {
            const double t = (x - f.mu) / f.sigma;
            const double density = standard_density(t);
            const double var = f.sigma * f.sigma;
            return SecondPartialMoments{
                var * ((1.0 + t * t) * standard_survival(t) - t * density),
                var * ((1.0 + t * t) * standard_cdf(t) + t * density)};
          },
          [x](const UniformFamily& f) {
            const double width = f.b - f.a;
            const double mid = 0.5 * (f.a + f.b);
            const double var = width * width / 12.0;
            if (x <= f.a) {
              return SecondPartialMoments{var + (mid - x) * (mid - x), 0.0};
            }
            if (x >= f.b) {
              return SecondPartialMoments{0.0, var + (x - mid) * (x - mid)};
            }
            const double above = f.b - x;
            const double below = x - f.a;
            return SecondPartialMoments{above * above * above / (3.0 * width),
                                        below * below * below / (3.0 * width)};
          },
          [x](const PointMassFamily& f) {
            const double d = f.c - x;
            return d > 0.0 ? SecondPartialMoments{d * d, 0.0}
                           : SecondPartialMoments{0.0, d * d};
          },
      },
      family_);
}

}  // namespace expectile
