#include "secm/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "secm/detail/tanh_sinh.hpp"
#include "secm/errors.hpp"

namespace secm {

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    std::ostringstream msg;
    msg << "invalid interval [" << a << ", " << b << "]: need finite a < b";
    throw InputError(msg.str());
  }
}

void IntegrationSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_refinement_levels < 1) {
    throw InputError("integration spec needs rel_tol > 0, abs_tol > 0, max_refinement_levels >= 1");
  }
}

void EndpointExponents::validate() const {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw InputError("endpoint exponents must exceed -1");
  }
}

namespace {

constexpr int kGaussPoints = (kGaussLegendreDegree + 1) / 2;

struct GaussLegendre {
  std::array<double, kGaussPoints> node{};
  std::array<double, kGaussPoints> weight{};

  GaussLegendre() {
    // Newton on P_n starting from the Chebyshev-like guess.
    const int n = kGaussPoints;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      node[i] = x;
      weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

double gauss_panel(const RealFunction& f, double a, double b, std::size_t& evals) {
  const GaussLegendre& rule = gauss_legendre();
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kGaussPoints; ++i) {
    const double x = c + r * rule.node[i];
    const double v = f(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand is not finite at x = " << x;
      throw EvaluationFailure(msg.str());
    }
    sum += rule.weight[i] * v;
  }
  evals += kGaussPoints;
  return r * sum;
}

Estimate<double> gauss_adaptive(const RealFunction& f, const Interval& interval,
                                const IntegrationSpec& spec) {
  struct Panel {
    double a, b, value;
    int depth;
  };
  std::size_t evals = 0;
  const double whole = gauss_panel(f, interval.a, interval.b, evals);
  std::vector<Panel> stack{{interval.a, interval.b, whole, 0}};
  double total = 0.0;
  double error = 0.0;
  const double width = interval.width();
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const double left = gauss_panel(f, p.a, mid, evals);
    const double right = gauss_panel(f, mid, p.b, evals);
    const double refined = left + right;
    const double diff = std::abs(refined - p.value);
    const double tol =
        std::max(spec.abs_tol, spec.rel_tol * std::abs(whole)) * (p.b - p.a) / width;
    if (diff <= tol) {
      total += refined;
      error += diff;
      continue;
    }
    if (p.depth + 1 >= spec.max_refinement_levels) {
      throw NonConvergence("Gauss-Legendre bisection budget exhausted");
    }
    stack.push_back({p.a, mid, left, p.depth + 1});
    stack.push_back({mid, p.b, right, p.depth + 1});
  }
  return {total, error, evals};
}

}  // namespace

Estimate<double> integrate(const RealFunction& f, const Interval& interval,
                           const IntegrationSpec& spec) {
  spec.validate();
  try {
    return gauss_adaptive(f, interval, spec);
  } catch (const NonConvergence&) {
    // Endpoint singularities defeat bisection; the double-exponential rule
    // copes as long as f is never asked for its value at an endpoint.
    const auto open = [&](const Abscissa& p) -> double {
      if (p.x <= interval.a || p.x >= interval.b) return 0.0;
      return f(p.x);
    };
    return detail::tanh_sinh<double>(open, interval, {}, spec);
  }
}

Estimate<double> integrate_singular(const RealFunction& h, const EndpointExponents& exps,
                                    const Interval& interval, const IntegrationSpec& spec) {
  spec.validate();
  exps.validate();
  const auto weighted = [&](const Abscissa& p) {
    double w = h(p.x);
    if (exps.alpha != 0.0) w *= std::pow(p.from_a, exps.alpha);
    if (exps.beta != 0.0) w *= std::pow(p.to_b, exps.beta);
    return w;
  };
  return detail::tanh_sinh<double>(weighted, interval, {}, spec);
}

Estimate<double> integrate_located(const LocatedFunction& f, const Interval& interval,
                                   std::span<const Abscissa> breaks, const IntegrationSpec& spec) {
  spec.validate();
  return detail::tanh_sinh<double>(f, interval, breaks, spec);
}

Estimate<std::complex<double>> integrate_located(const LocatedComplexFunction& f,
                                                 const Interval& interval,
                                                 std::span<const Abscissa> breaks,
                                                 const IntegrationSpec& spec) {
  spec.validate();
  return detail::tanh_sinh<std::complex<double>>(f, interval, breaks, spec);
}

Estimate<double> principal_value_located(const LocatedFunction& w, const Abscissa& pole,
                                         const Interval& interval,
                                         std::span<const Abscissa> breaks,
                                         const IntegrationSpec& spec) {
  spec.validate();
  if (!(pole.from_a > 0.0) || !(pole.to_b > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "pole " << pole.x << " is not inside (" << interval.a << ", " << interval.b << ")";
    throw PoleOutsideInterval(msg.str());
  }
  const double w_pole = w(pole);
  // The numerator varies on the scale of the distance to the nearest
  // endpoint, so the removable-singularity guard is measured against it.
  const double local = std::min(pole.from_a, pole.to_b);
  const double guard = 1e-8 * local;
  const bool near_b = pole.to_b < pole.from_a;

  bool have_slope = false;
  double slope = 0.0;
  auto derivative = [&]() {
    if (have_slope) return slope;
    const double step = 1e-6 * local;
    const Abscissa plus{pole.x + step, pole.from_a + step, pole.to_b - step};
    const Abscissa minus{pole.x - step, pole.from_a - step, pole.to_b + step};
    slope = (w(plus) - w(minus)) * (local / (2.0 * step));  // already times local
    have_slope = true;
    return slope;
  };

  // The integrand is carried multiplied by `local`: near a singular endpoint
  // w(u) / gap alone can overflow while the integral stays finite.
  const auto subtracted = [&](const Abscissa& u) -> double {
    const double gap = near_b ? u.to_b - pole.to_b : pole.from_a - u.from_a;  // pole - u
    if (std::abs(gap) < guard) return -derivative();
    return (w(u) - w_pole) * (local / gap);
  };

  std::vector<Abscissa> cuts(breaks.begin(), breaks.end());
  cuts.push_back(pole);
  IntegrationSpec scaled = spec;
  scaled.abs_tol = spec.abs_tol * local;
  Estimate<double> est = detail::tanh_sinh<double>(subtracted, interval, cuts, scaled);
  est.value /= local;
  est.error /= local;
  if (w_pole != 0.0) est.value += w_pole * std::log(pole.from_a / pole.to_b);
  return est;
}

Estimate<double> principal_value(const RealFunction& w, double pole, const Interval& interval,
                                 const IntegrationSpec& spec) {
  if (!interval.contains_open(pole)) {
    std::ostringstream msg;
    msg << "pole " << pole << " is not inside (" << interval.a << ", " << interval.b << ")";
    throw PoleOutsideInterval(msg.str());
  }
  const LocatedFunction located = [&](const Abscissa& p) { return w(p.x); };
  return principal_value_located(located, Abscissa::at(interval, pole), interval, {}, spec);
}

DifferenceQuotient::DifferenceQuotient(const RealFunction& f, double x, const Interval& interval)
    : f_(f), x_(x), fx_(f(x)), interval_(interval) {}

double DifferenceQuotient::derivative() const {
  if (have_derivative_) return derivative_;
  const double width = interval_.width();
  const double step = 1e-6 * width;
  const double room_left = x_ - interval_.a;
  const double room_right = interval_.b - x_;
  if (room_left >= step && room_right >= step) {
    derivative_ = (f_(x_ + step) - f_(x_ - step)) / (2.0 * step);
  } else if (room_right >= room_left) {
    const double h = std::min(step, room_right);
    derivative_ = (f_(x_ + h) - fx_) / h;
  } else {
    const double h = std::min(step, room_left);
    derivative_ = (fx_ - f_(x_ - h)) / h;
  }
  have_derivative_ = true;
  return derivative_;
}

double DifferenceQuotient::operator()(double u) const {
  const double gap = u - x_;
  if (std::abs(gap) < 1e-8 * interval_.width()) return derivative();
  return (f_(u) - fx_) / gap;
}

std::vector<QuadratureNode> tanh_sinh_rule(const Interval& interval,
                                           std::span<const Abscissa> breaks, int level) {
  std::vector<QuadratureNode> rule;
  const double h = detail::kStep0 / std::ldexp(1.0, level);
  const int kmax = static_cast<int>(detail::kTMax / h);
  for (const detail::Segment& seg : detail::segments(interval, breaks)) {
    if (seg.width <= 0.0) continue;
    const double half = 0.5 * seg.width;
    const double right = seg.left + seg.width;
    for (int k = -kmax; k <= kmax; ++k) {
      const double t = k * h;
      const detail::TanhSinhPoint p = detail::tanh_sinh_point(std::abs(t), half);
      if (p.near == 0.0 || p.weight * h < 1e-300) continue;
      const double dl = t >= 0.0 ? p.far : p.near;
      const double dr = t >= 0.0 ? p.near : p.far;
      const double x = std::clamp(t >= 0.0 ? right - dr : seg.left + dl, seg.left, right);
      rule.push_back({{x, seg.offset_a + dl, dr + seg.offset_b}, p.weight * h});
    }
  }
  return rule;
}

}  // namespace secm
