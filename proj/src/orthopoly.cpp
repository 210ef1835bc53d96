#include "secm/orthopoly.hpp"

#include <cmath>
#include <sstream>

#include "secm/errors.hpp"

namespace secm {

namespace {

struct DiscreteMeasure {
  std::vector<double> x;
  std::vector<double> w;
};

DiscreteMeasure discretize(const Measure& rho, int level) {
  const std::vector<Abscissa> breaks = rho.breakpoints();
  DiscreteMeasure out;
  for (const QuadratureNode& node : tanh_sinh_rule(rho.interval(), breaks, level)) {
    const double w = node.weight * rho.at(node.where);
    if (w == 0.0) continue;
    if (!std::isfinite(w)) throw EvaluationFailure("measure is not finite at a quadrature node");
    out.x.push_back(node.where.x);
    out.w.push_back(w);
  }
  return out;
}

RecurrenceCoefficients stieltjes_procedure(const DiscreteMeasure& m, int degree) {
  const std::size_t n_nodes = m.x.size();
  RecurrenceCoefficients rc;
  double mass = 0.0;
  for (double w : m.w) mass += w;
  rc.mass = mass;
  rc.b.push_back(0.0);

  std::vector<std::vector<double>> q;
  q.emplace_back(n_nodes, 1.0 / std::sqrt(mass));
  std::vector<double> prev(n_nodes, 0.0);
  for (int n = 0; n < degree; ++n) {
    const std::vector<double>& cur = q.back();
    double a = 0.0;
    for (std::size_t i = 0; i < n_nodes; ++i) a += m.w[i] * m.x[i] * cur[i] * cur[i];
    std::vector<double> r(n_nodes);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n_nodes; ++i) {
      r[i] = (m.x[i] - a) * cur[i] - rc.b.back() * prev[i];
      norm2 += m.w[i] * r[i] * r[i];
    }
    if (!(norm2 > 0.0)) {
      std::ostringstream msg;
      msg << "Stieltjes procedure broke down: b_" << n + 1 << "^2 = " << norm2;
      throw InstabilityDetected(msg.str());
    }
    const double b = std::sqrt(norm2);
    for (double& v : r) v /= b;
    rc.a.push_back(a);
    rc.b.push_back(b);
    prev = cur;
    q.push_back(std::move(r));
  }

  double drift = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (std::size_t k = 0; k <= j; ++k) {
      double g = 0.0;
      for (std::size_t i = 0; i < n_nodes; ++i) g += m.w[i] * q[j][i] * q[k][i];
      drift = std::max(drift, std::abs(g - (j == k ? 1.0 : 0.0)));
    }
  }
  if (drift > 1e-6) {
    std::ostringstream msg;
    msg << "orthogonality drift " << drift << " exceeds 1e-6 at degree " << degree;
    throw InstabilityDetected(msg.str());
  }
  return rc;
}

double max_change(const RecurrenceCoefficients& lhs, const RecurrenceCoefficients& rhs) {
  double change = std::abs(lhs.mass - rhs.mass);
  for (std::size_t k = 0; k < lhs.a.size(); ++k) change = std::max(change, std::abs(lhs.a[k] - rhs.a[k]));
  for (std::size_t k = 0; k < lhs.b.size(); ++k) change = std::max(change, std::abs(lhs.b[k] - rhs.b[k]));
  return change;
}

}  // namespace

RecurrenceCoefficients recurrence_coefficients(const Measure& rho, int degree,
                                               const IntegrationSpec& spec, int max_degree) {
  if (degree < 0) throw InputError("degree must be non-negative");
  if (degree > max_degree) {
    std::ostringstream msg;
    msg << "degree " << degree << " exceeds the cap " << max_degree;
    throw InputError(msg.str());
  }
  const double scale = std::max(1.0, rho.interval().width());
  RecurrenceCoefficients previous = stieltjes_procedure(discretize(rho, 3), degree);
  const int last_level = std::min(3 + spec.max_refinement_levels, 10);
  for (int level = 4; level <= last_level; ++level) {
    RecurrenceCoefficients current = stieltjes_procedure(discretize(rho, level), degree);
    if (max_change(previous, current) <= std::max(spec.abs_tol, 10.0 * spec.rel_tol * scale)) {
      return current;
    }
    previous = std::move(current);
  }
  throw NonConvergence("recurrence coefficients did not settle under rule refinement");
}

PolynomialSequence orthonormal_polys(const RecurrenceCoefficients& coeffs) {
  PolynomialSequence P;
  P.push_back(Polynomial::constant(1.0 / std::sqrt(coeffs.mass)));
  Polynomial prev;
  for (int n = 0; n < coeffs.degree(); ++n) {
    Polynomial next = Polynomial::shifted_x(coeffs.a[n]) * P.back() - coeffs.b[n] * prev;
    next *= 1.0 / coeffs.b[n + 1];
    prev = P.back();
    P.push_back(std::move(next));
  }
  return P;
}

PolynomialSequence secondary_polys(const RecurrenceCoefficients& coeffs, double d0) {
  if (!(d0 > 0.0)) throw InputError("secondary polynomials need d0 = c2 - c1^2 > 0");
  PolynomialSequence Q;
  Q.push_back(Polynomial{});
  if (coeffs.degree() == 0) return Q;
  Q.push_back(Polynomial::constant(1.0 / std::sqrt(d0)));
  for (int n = 1; n < coeffs.degree(); ++n) {
    Polynomial next = Polynomial::shifted_x(coeffs.a[n]) * Q[n] - coeffs.b[n] * Q[n - 1];
    next *= 1.0 / coeffs.b[n + 1];
    Q.push_back(std::move(next));
  }
  return Q;
}

double apply_T(const Measure& rho, const RealFunction& f, double x, const IntegrationSpec& spec) {
  const Interval& interval = rho.interval();
  if (!(x >= interval.a && x <= interval.b)) {
    std::ostringstream msg;
    msg << "T_rho evaluated at x = " << x << " outside the support";
    throw DomainError(msg.str());
  }
  const DifferenceQuotient dq(f, x, interval);
  const LocatedFunction integrand = [&](const Abscissa& p) {
    const double w = rho.at(p);
    return w == 0.0 ? 0.0 : dq(p.x) * w;
  };
  const std::vector<Abscissa> breaks = rho.breakpoints();
  return integrate_located(integrand, interval, breaks, spec).value;
}

RealFunction T_image(const Measure& rho, RealFunction f, const IntegrationSpec& spec) {
  return [&rho, f = std::move(f), spec](double x) { return apply_T(rho, f, x, spec); };
}

MuFamilies mu_families(const PolynomialSequence& P, const PolynomialSequence& Q, double c1) {
  if (P.size() != Q.size()) throw InputError("P and Q sequences differ in length");
  MuFamilies out;
  for (std::size_t n = 0; n + 1 < P.size(); ++n) {
    out.A.push_back(Q[n + 1]);
    out.B.push_back(Polynomial::shifted_x(c1) * Q[n + 1] - P[n + 1]);
  }
  return out;
}

MuFamilies normalized_mu_families(const MuFamilies& families, double d0) {
  if (!(d0 > 0.0)) throw InputError("normalization needs d0 > 0");
  const double root = std::sqrt(d0);
  MuFamilies out;
  for (const Polynomial& a : families.A) out.A.push_back(root * a);
  for (const Polynomial& b : families.B) out.B.push_back((1.0 / root) * b);
  return out;
}

}  // namespace secm
