#include "secm/measures.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "secm/errors.hpp"

namespace secm {

Density::Density(std::string name, Interval interval, RealFunction smooth_part,
                 EndpointExponents exps, const IntegrationSpec& spec)
    : name_(std::move(name)), interval_(interval), smooth_(std::move(smooth_part)), exps_(exps) {
  exps_.validate();
  for (double x : interior_grid(interval_, 1000, 0.0)) {
    const double v = (*this)(x);
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << "density '" << name_ << "' is negative or not finite at x = " << x;
      throw InvalidDensity(msg.str());
    }
  }
  const double mass = moment(*this, 0, spec);
  if (std::abs(mass - 1.0) > 1e-2 || !(mass > 0.0)) {
    std::ostringstream msg;
    msg << "density '" << name_ << "' has mass " << mass << ", too far from 1 to normalize";
    throw InvalidDensity(msg.str());
  }
  if (std::abs(mass - 1.0) > 1e-8) scale_ = 1.0 / mass;
  mean_ = moment(*this, 1, spec);
}

double Density::at(const Abscissa& p) const {
  double v = scale_ * smooth_(p.x);
  if (exps_.alpha != 0.0) v *= std::pow(p.from_a, exps_.alpha);
  if (exps_.beta != 0.0) v *= std::pow(p.to_b, exps_.beta);
  return v;
}

Density catalog(std::string_view name) {
  using std::numbers::pi;
  if (name == "cheb-u") {
    return Density("cheb-u", Interval(-1.0, 1.0), [](double) { return 2.0 / pi; }, {0.5, 0.5});
  }
  if (name == "cheb-t") {
    return Density("cheb-t", Interval(-1.0, 1.0), [](double) { return 1.0 / pi; }, {-0.5, -0.5});
  }
  if (name == "uniform") {
    return Density("uniform", Interval(0.0, 1.0), [](double) { return 1.0; });
  }
  if (name == "linear2x") {
    return Density("linear2x", Interval(0.0, 1.0), [](double x) { return 2.0 * x; });
  }
  if (name == "sqrt32") {
    return Density("sqrt32", Interval(0.0, 1.0), [](double) { return 1.5; }, {0.5, 0.0});
  }
  throw UnknownDensity("unknown density '" + std::string(name) +
                       "' (expected cheb-u, cheb-t, uniform, linear2x or sqrt32)");
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"cheb-u", "cheb-t", "uniform", "linear2x", "sqrt32"};
  return names;
}

Estimate<double> integrate_against(const RealFunction& f, const Measure& rho,
                                   const IntegrationSpec& spec) {
  const LocatedFunction integrand = [&](const Abscissa& p) {
    const double w = rho.at(p);
    return w == 0.0 ? 0.0 : f(p.x) * w;
  };
  const std::vector<Abscissa> breaks = rho.breakpoints();
  return integrate_located(integrand, rho.interval(), breaks, spec);
}

double moment(const Measure& rho, int n, const IntegrationSpec& spec) {
  if (n < 0) throw InputError("moment order must be non-negative");
  return integrate_against([n](double x) { return n == 0 ? 1.0 : std::pow(x, n); }, rho, spec)
      .value;
}

std::vector<double> moments(const Measure& rho, int n_max, const IntegrationSpec& spec) {
  std::vector<double> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(moment(rho, n, spec));
  return out;
}

double inner_product(const RealFunction& f, const RealFunction& g, const Measure& rho,
                     const IntegrationSpec& spec) {
  return integrate_against([&](double x) { return f(x) * g(x); }, rho, spec).value;
}

RealFunction mean_project(const RealFunction& f, const Measure& rho, const IntegrationSpec& spec) {
  const double mean = integrate_against(f, rho, spec).value;
  return [f, mean](double x) { return f(x) - mean; };
}

std::vector<double> interior_grid(const Interval& interval, int points, double margin_fraction) {
  std::vector<double> grid;
  if (points <= 0) return grid;
  const double width = interval.width();
  if (margin_fraction > 0.0) {
    const double lo = interval.a + margin_fraction * width;
    const double span = width * (1.0 - 2.0 * margin_fraction);
    if (points == 1) return {lo + 0.5 * span};
    for (int k = 0; k < points; ++k) grid.push_back(lo + span * k / (points - 1));
    return grid;
  }
  // Cell midpoints keep every point off the endpoints.
  for (int k = 0; k < points; ++k) grid.push_back(interval.a + width * (k + 0.5) / points);
  return grid;
}

}  // namespace secm
