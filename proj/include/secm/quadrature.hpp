#pragma once

// Numerical integration on a compact interval: smooth integrands, algebraic
// endpoint singularities and Cauchy principal values.
//
// Two engines live here. Adaptive Gauss-Legendre with bisection handles
// smooth integrands. A double-exponential (tanh-sinh) rule handles integrands
// with endpoint singularities; its nodes carry their distances to both
// endpoints exactly, so weights such as (x-a)^alpha (b-x)^beta stay accurate
// even where x itself rounds onto an endpoint.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace secm {

struct Interval {
  double a;
  double b;

  /// Throws InputError unless a < b and both are finite.
  Interval(double a, double b);

  double width() const { return b - a; }
  double midpoint() const { return a + 0.5 * (b - a); }
  bool contains_open(double x) const { return a < x && x < b; }
};

struct IntegrationSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_refinement_levels = 12;

  void validate() const;
};

/// Exponents of the weight (x-a)^alpha (b-x)^beta.
struct EndpointExponents {
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;
};

/// A point of [a, b] with its distances to both endpoints. The distances are
/// authoritative: near an endpoint x may round onto it while from_a / to_b
/// stay exact.
struct Abscissa {
  double x;
  double from_a;
  double to_b;

  static Abscissa at(const Interval& interval, double x) {
    return {x, x - interval.a, interval.b - x};
  }
};

template <class T>
struct Estimate {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

using RealFunction = std::function<double(double)>;
using LocatedFunction = std::function<double(const Abscissa&)>;
using LocatedComplexFunction = std::function<std::complex<double>(const Abscissa&)>;

/// Degree of exactness of the Gauss-Legendre panel rule used by integrate().
inline constexpr int kGaussLegendreDegree = 19;

/// Adaptive Gauss-Legendre; never evaluates f at the endpoints. When the
/// bisection budget runs out the integral is retried with tanh-sinh before
/// NonConvergence is raised.
Estimate<double> integrate(const RealFunction& f, const Interval& interval,
                           const IntegrationSpec& spec = {});

/// Integral of (x-a)^alpha (b-x)^beta h(x) with h smooth on [a, b].
Estimate<double> integrate_singular(const RealFunction& h, const EndpointExponents& exps,
                                    const Interval& interval, const IntegrationSpec& spec = {});

/// PV integral of w(u) / (pole - u) over the interval, by singularity
/// subtraction: int (w(u) - w(pole)) / (pole - u) du + w(pole) ln((pole-a)/(b-pole)).
Estimate<double> principal_value(const RealFunction& w, double pole, const Interval& interval,
                                 const IntegrationSpec& spec = {});

/// Tanh-sinh over the interval split at `breaks`; f sees exact endpoint distances.
Estimate<double> integrate_located(const LocatedFunction& f, const Interval& interval,
                                   std::span<const Abscissa> breaks, const IntegrationSpec& spec);

Estimate<std::complex<double>> integrate_located(const LocatedComplexFunction& f,
                                                 const Interval& interval,
                                                 std::span<const Abscissa> breaks,
                                                 const IntegrationSpec& spec);

/// principal_value() for an endpoint-aware numerator and a pole given with
/// exact distances. `breaks` are extra split points (the pole is added).
Estimate<double> principal_value_located(const LocatedFunction& w, const Abscissa& pole,
                                         const Interval& interval,
                                         std::span<const Abscissa> breaks,
                                         const IntegrationSpec& spec);

/// (f(u) - f(x)) / (u - x) with the removable singularity at u = x replaced by
/// a numerical derivative when |u - x| < 1e-8 * width.
class DifferenceQuotient {
 public:
  DifferenceQuotient(const RealFunction& f, double x, const Interval& interval);

  double operator()(double u) const;
  double fx() const { return fx_; }

 private:
  double derivative() const;

  const RealFunction& f_;
  double x_;
  double fx_;
  Interval interval_;
  mutable double derivative_ = 0.0;
  mutable bool have_derivative_ = false;
};

/// Fixed tanh-sinh rule (nodes and weights) at a given refinement level,
/// honouring `breaks`. Used to discretize measures.
struct QuadratureNode {
  Abscissa where;
  double weight;
};

std::vector<QuadratureNode> tanh_sinh_rule(const Interval& interval,
                                           std::span<const Abscissa> breaks, int level);

}  // namespace secm
