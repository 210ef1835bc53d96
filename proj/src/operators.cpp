#include "secm/operators.hpp"

#include <cmath>
#include <sstream>

#include "secm/errors.hpp"

namespace secm {

namespace {

std::shared_ptr<const FamilyDensity> validated_member(const Reducer& base, double t) {
  auto member = FamilyDensity::make(base, t);
  if (!member->parameter().usable()) {
    std::ostringstream msg;
    msg << "t = " << t << " fails the validity policy for '" << base.measure().name()
        << "': " << member->parameter().note;
    throw InvalidParameter(msg.str());
  }
  return member;
}

std::vector<double> check_grid(const Measure& rho, int points) {
  return interior_grid(rho.interval(), points, 0.0);
}

template <class Body>
VerificationReport reported(std::string id, double tolerance, Provenance provenance, Body body) {
  const Stopwatch clock;
  VerificationReport report;
  report.check_id = std::move(id);
  report.tolerance = tolerance;
  report.provenance = provenance;
  try {
    body(report);
  } catch (const Error& e) {
    report.pass = false;
    report.detail = e.what();
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

void set_deviation(VerificationReport& report, double deviation) {
  report.computed = deviation;
  report.pass = std::isfinite(deviation) && deviation < report.tolerance;
}

}  // namespace

OperatorContext::OperatorContext(const Reducer& base, double t)
    : base_(base), rho_t_(validated_member(base, t)) {}

OperatorContext::OperatorContext(std::shared_ptr<const Measure> rho, double t,
                                 const IntegrationSpec& spec)
    : OperatorContext(Reducer(std::move(rho), spec), t) {}

double apply_V(const OperatorContext& ctx, const RealFunction& f, double x,
               const IntegrationSpec& spec) {
  const double t = ctx.t();
  if (t == 1.0) return f(x);
  return t * f(x) + (1.0 - t) * (x - ctx.c1()) * apply_T(ctx.rho(), f, x, spec);
}

double apply_V_inverse(const OperatorContext& ctx, const RealFunction& f, double x,
                       const IntegrationSpec& spec) {
  const double t = ctx.t();
  if (t == 1.0) return f(x);
  return f(x) / t + (1.0 - 1.0 / t) * (x - ctx.c1()) * apply_T(ctx.rho_t(), f, x, spec);
}

RealFunction V_image(const OperatorContext& ctx, RealFunction f, const IntegrationSpec& spec) {
  return [&ctx, f = std::move(f), spec](double x) { return apply_V(ctx, f, x, spec); };
}

RealFunction V_inverse_image(const OperatorContext& ctx, RealFunction f,
                             const IntegrationSpec& spec) {
  return [&ctx, f = std::move(f), spec](double x) { return apply_V_inverse(ctx, f, x, spec); };
}

VerificationReport isometry_check(const OperatorContext& ctx, const RealFunction& f,
                                  const IntegrationSpec& spec) {
  return reported("isometry", 1e-6, Provenance::paper, [&](VerificationReport& report) {
    const RealFunction centred = mean_project(f, ctx.rho(), spec);
    const RealFunction image = V_image(ctx, centred, spec);
    const double L = integrate_against([&](double x) { return centred(x) * centred(x); },
                                       ctx.rho(), spec)
                         .value;
    const double R = integrate_against([&](double x) {
                       const double v = image(x);
                       return v * v;
                     },
                                       ctx.rho_t(), spec)
                         .value /
                     ctx.t();
    report.tolerance = 1e-6 * std::max(1.0, std::abs(L));
    report.expected = L;
    report.computed = R;
    report.pass = std::abs(L - R) <= report.tolerance;
    report.metrics = {{"L", L}, {"R", R}};
  });
}

TransformedPolys transformed_polys(const OperatorContext& ctx, int N, const IntegrationSpec& spec) {
  if (N < 0) throw InputError("N must be non-negative");
  const Measure& rho = ctx.rho();
  const RecurrenceCoefficients coeffs = recurrence_coefficients(rho, N, spec);
  const double mass = moment(rho, 0, spec);
  const double c1 = moment(rho, 1, spec) / mass;
  const double d0 = moment(rho, 2, spec) / mass - c1 * c1;
  const PolynomialSequence P = orthonormal_polys(coeffs);
  const PolynomialSequence Q = secondary_polys(coeffs, d0);

  const double t = ctx.t();
  const double root = std::sqrt(t);
  const Polynomial shift = Polynomial::shifted_x(ctx.c1());
  TransformedPolys out;
  out.P.push_back(P[0]);
  out.Q.push_back(Polynomial{});
  for (int n = 1; n <= N; ++n) {
    out.P.push_back((1.0 / root) * (t * P[n] + (1.0 - t) * (shift * Q[n])));
    out.Q.push_back((1.0 / root) * Q[n]);
  }
  return out;
}

IntegralEquationProblem::IntegralEquationProblem(const Reducer& rho, double lambda, RealFunction g)
    : lambda_(lambda), g_(std::move(g)) {
  if (!std::isfinite(lambda) || !(1.0 + lambda > 0.0)) {
    std::ostringstream msg;
    msg << "lambda = " << lambda << " gives no positive family parameter 1/(1+lambda)";
    throw InvalidParameter(msg.str());
  }
  if (!g_) throw InputError("integral equation needs a right-hand side");
  context_ = std::make_shared<const OperatorContext>(rho, 1.0 / (1.0 + lambda));
}

double solve_integral_equation(const IntegralEquationProblem& problem, double x,
                               const IntegrationSpec& spec) {
  const double lambda = problem.lambda();
  const double gx = problem.g()(x);
  if (lambda == 0.0) return gx;
  const OperatorContext& ctx = problem.context();
  return gx -
         lambda / (1.0 + lambda) * (x - ctx.c1()) * apply_T(ctx.rho_t(), problem.g(), x, spec);
}

RealFunction solution(const IntegralEquationProblem& problem, const IntegrationSpec& spec) {
  return [&problem, spec](double x) { return solve_integral_equation(problem, x, spec); };
}

VerificationReport residual_check(const IntegralEquationProblem& problem, const RealFunction& f,
                                  const IntegrationSpec& spec) {
  return reported("integral-equation-residual", 1e-5, Provenance::paper,
                  [&](VerificationReport& report) {
                    const Measure& rho = problem.rho();
                    const double c1 = problem.context().c1();
                    double worst = 0.0;
                    for (double x : check_grid(rho, 30)) {
                      const double lhs =
                          f(x) + problem.lambda() * (x - c1) * apply_T(rho, f, x, spec);
                      worst = std::max(worst, std::abs(lhs - problem.g()(x)));
                    }
                    set_deviation(report, worst);
                  });
}

RealFunction shift_multiply(RealFunction f, double c1) {
  return [f = std::move(f), c1](double x) { return (x - c1) * f(x); };
}

VerificationReport barycentric_check(const Reducer& rho, double t, double s, const RealFunction& f,
                                     const IntegrationSpec& spec) {
  return reported("barycentric", 1e-5, Provenance::paper, [&](VerificationReport& report) {
    if (t == s) throw InvalidParameter("barycentric formula needs t != s");
    const auto rho_t = validated_member(rho, t);
    const auto rho_s = validated_member(rho, s);
    const RealFunction shifted = shift_multiply(f, rho_t->c1());
    const RealFunction inner = T_image(*rho_s, shifted, spec);
    double worst = 0.0;
    for (double x : check_grid(rho.measure(), 20)) {
      const double lhs = apply_T(*rho_t, inner, x, spec);
      const double rhs =
          (s * apply_T(*rho_s, f, x, spec) - t * apply_T(*rho_t, f, x, spec)) / (s - t);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    set_deviation(report, worst);
  });
}

VerificationReport composition_check(const Reducer& rho, double t, double s, const RealFunction& f,
                                     const IntegrationSpec& spec) {
  return reported("composition", 1e-5, Provenance::paper, [&](VerificationReport& report) {
    const OperatorContext outer(rho, t);
    const OperatorContext direct(rho, t * s);
    const OperatorContext second(Reducer(outer.rho_t_ptr(), rho.spec()), s);
    const RealFunction first = V_image(outer, f, spec);
    double worst = 0.0;
    for (double x : check_grid(rho.measure(), 20)) {
      const double lhs = apply_V(second, first, x, spec);
      const double rhs = apply_V(direct, f, x, spec);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    set_deviation(report, worst);
  });
}

VerificationReport transform_relation_check(const Measure& rho, double t, double s, Complex z,
                                            const IntegrationSpec& spec) {
  return reported("transform-relation", 1e-8, Provenance::paper, [&](VerificationReport& report) {
    if (t == s) throw InvalidParameter("transform relation needs t != s");
    const Complex st = family_transform(rho, t, z, spec);
    const Complex ss = family_transform(rho, s, z, spec);
    const Complex lhs = (z - rho.mean()) * st * ss;
    const Complex rhs = (t * st - s * ss) / (t - s);
    report.metrics = {{"lhs_re", lhs.real()}, {"lhs_im", lhs.imag()},
                      {"rhs_re", rhs.real()}, {"rhs_im", rhs.imag()}};
    report.computed = std::abs(lhs - rhs);
    report.pass = report.computed <= report.tolerance;
  });
}

}  // namespace secm
