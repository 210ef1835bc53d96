#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "secm/errors.hpp"
#include "secm/quadrature.hpp"

namespace secm::detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// Abscissa offset and weight of the tanh-sinh node at parameter t >= 0 on a
/// segment of half-width `half`: the node sits `near` away from the closer
/// endpoint (computed without cancellation) and `far` from the other.
struct TanhSinhPoint {
  double near;
  double far;
  double weight;
};

inline TanhSinhPoint tanh_sinh_point(double t, double half) {
  const double s = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * s);
  const double complement = 2.0 * e / (1.0 + e);  // 1 - tanh(s)
  const double weight =
      half * 0.5 * std::numbers::pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
  return {half * complement, half * (2.0 - complement), weight};
}

// At t = 5.7 the node sits 1e-203 of the half-width from the endpoint; an
// integrable singularity contributes nothing measurable below that, and
// nested principal values stay clear of overflow.
inline constexpr double kTMax = 5.7;
inline constexpr double kStep0 = 0.5;
inline constexpr int kMinLevel = 3;

/// Segment [left, left + width] of a larger interval; node abscissas are
/// reported relative to the enclosing interval through `offset_a` (distance
/// from the interval's a to the segment's left end) and `offset_b`.
struct Segment {
  double left;
  double width;
  double offset_a;
  double offset_b;
};

template <class T, class F>
Estimate<T> tanh_sinh_segment(F&& f, const Segment& seg, const IntegrationSpec& spec) {
  const double half = 0.5 * seg.width;
  const double right = seg.left + seg.width;
  std::size_t evals = 0;

  auto eval = [&](double t, T& sum, double& l1) {
    const bool positive = t >= 0.0;
    const TanhSinhPoint p = tanh_sinh_point(std::abs(t), half);
    // Nodes this close to the segment end cannot contribute; skipping them
    // also keeps nested evaluations away from subnormal distances.
    if (p.near == 0.0 || p.weight < 1e-300) return 0.0;
    const double dl = positive ? p.far : p.near;
    const double dr = positive ? p.near : p.far;
    double x = positive ? right - dr : seg.left + dl;
    x = std::clamp(x, seg.left, right);
    const Abscissa where{x, seg.offset_a + dl, dr + seg.offset_b};
    const T v = f(where);
    ++evals;
    if (!finite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand is not finite at x = " << x << " (distances " << where.from_a << ", "
          << where.to_b << ")";
      throw EvaluationFailure(msg.str());
    }
    const T term = v * p.weight;
    sum += term;
    l1 += magnitude(term);
    return magnitude(term);
  };

  // Level 0 also decides how far out the tails need to be sampled.
  double h = kStep0;
  T sum{};
  double l1 = 0.0;
  eval(0.0, sum, l1);
  const int kmax = static_cast<int>(kTMax / h);
  std::vector<double> right_terms(kmax + 1, 0.0), left_terms(kmax + 1, 0.0);
  for (int k = 1; k <= kmax; ++k) {
    right_terms[k] = eval(k * h, sum, l1);
    left_terms[k] = eval(-k * h, sum, l1);
  }
  auto tail_limit = [&](const std::vector<double>& terms) {
    int last = 0;
    for (int k = 1; k <= kmax; ++k) {
      if (terms[k] > 1e-20 * l1) last = k;
    }
    return std::min(kTMax, (last + 2) * h);
  };
  const double t_right = tail_limit(right_terms);
  const double t_left = tail_limit(left_terms);

  T estimate = sum * h;
  double l1_estimate = l1 * h;
  for (int level = 1; level <= spec.max_refinement_levels; ++level) {
    h *= 0.5;
    T fresh{};
    double fresh_l1 = 0.0;
    for (double t = h; t <= t_right; t += 2.0 * h) eval(t, fresh, fresh_l1);
    for (double t = h; t <= t_left; t += 2.0 * h) eval(-t, fresh, fresh_l1);
    const T next = 0.5 * estimate + h * fresh;
    l1_estimate = 0.5 * l1_estimate + h * fresh_l1;
    const double change = magnitude(next - estimate);
    estimate = next;
    const double tol = std::max(spec.abs_tol, spec.rel_tol * l1_estimate);
    if (level >= kMinLevel && change <= tol) {
      return {estimate, change, evals};
    }
  }
  std::ostringstream msg;
  msg << "tanh-sinh did not converge within " << spec.max_refinement_levels
      << " refinement levels on a segment of width " << seg.width;
  throw NonConvergence(msg.str());
}

/// Sorted, de-duplicated interior split points.
inline std::vector<Abscissa> interior_breaks(const Interval& interval,
                                             std::span<const Abscissa> breaks) {
  std::vector<Abscissa> out;
  for (const Abscissa& p : breaks) {
    if (p.from_a > 0.0 && p.to_b > 0.0) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const Abscissa& l, const Abscissa& r) { return l.from_a < r.from_a; });
  const double tiny = 1e-14 * interval.width();
  std::vector<Abscissa> unique;
  for (const Abscissa& p : out) {
    if (unique.empty() || p.from_a - unique.back().from_a > tiny) unique.push_back(p);
  }
  return unique;
}

inline std::vector<Segment> segments(const Interval& interval, std::span<const Abscissa> breaks) {
  const std::vector<Abscissa> cuts = interior_breaks(interval, breaks);
  std::vector<Segment> out;
  Abscissa left{interval.a, 0.0, interval.width()};
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    const Abscissa right = i < cuts.size() ? cuts[i] : Abscissa{interval.b, interval.width(), 0.0};
    // Segment widths come from the exact distances of whichever end is closer.
    double width;
    if (i == 0) {
      width = right.from_a;
    } else if (i == cuts.size()) {
      width = left.to_b;
    } else {
      width = right.from_a - left.from_a;
    }
    out.push_back({left.x, width, left.from_a, right.to_b});
    left = right;
  }
  return out;
}

template <class T, class F>
Estimate<T> tanh_sinh(F&& f, const Interval& interval, std::span<const Abscissa> breaks,
                      const IntegrationSpec& spec) {
  Estimate<T> total;
  for (const Segment& seg : segments(interval, breaks)) {
    if (seg.width <= 0.0) continue;
    const Estimate<T> part = tanh_sinh_segment<T>(f, seg, spec);
    total.value += part.value;
    total.error += part.error;
    total.evaluations += part.evaluations;
  }
  return total;
}

}  // namespace secm::detail
