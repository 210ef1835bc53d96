#pragma once

#include <memory>

#include "secm/family.hpp"
#include "secm/orthopoly.hpp"

namespace secm {

/// A base measure rho with a validated family member rho_t. Throws
/// InvalidParameter when t fails the validity policy.
class OperatorContext {
 public:
  OperatorContext(const Reducer& base, double t);
  OperatorContext(std::shared_ptr<const Measure> rho, double t, const IntegrationSpec& spec = {});

  const Measure& rho() const { return base_.measure(); }
  const Reducer& base() const { return base_; }
  const FamilyDensity& rho_t() const { return *rho_t_; }
  const std::shared_ptr<const FamilyDensity>& rho_t_ptr() const { return rho_t_; }
  const FamilyParameter& parameter() const { return rho_t_->parameter(); }
  double t() const { return rho_t_->t(); }
  double c1() const { return rho_t_->c1(); }
  /// rho_t / t
  double rho_t_tilde(double x) const { return rho_t_->operator()(x) / t(); }

 private:
  Reducer base_;
  std::shared_ptr<const FamilyDensity> rho_t_;
};

/// t f(x) + (1-t)(x-c1) T_rho(f)(x)
double apply_V(const OperatorContext& ctx, const RealFunction& f, double x,
               const IntegrationSpec& spec = {});

/// f(x)/t + (1-1/t)(x-c1) T_{rho_t}(f)(x)
double apply_V_inverse(const OperatorContext& ctx, const RealFunction& f, double x,
                       const IntegrationSpec& spec = {});

/// x -> apply_V(ctx, f, x). `ctx` must outlive the result.
RealFunction V_image(const OperatorContext& ctx, RealFunction f, const IntegrationSpec& spec = {});
RealFunction V_inverse_image(const OperatorContext& ctx, RealFunction f,
                             const IntegrationSpec& spec = {});

/// Compares int f~^2 rho with int (V f~)^2 rho_t / t for f~ = f - mean_rho(f).
/// Passes iff |L - R| <= 1e-6 max(1, |L|); metrics "L" and "R".
VerificationReport isometry_check(const OperatorContext& ctx, const RealFunction& f,
                                  const IntegrationSpec& spec = {});

struct TransformedPolys {
  PolynomialSequence P;  // P_0^t = 1, P_n^t = (t P_n + (1-t)(x-c1) Q_n) / sqrt(t)
  PolynomialSequence Q;  // Q_0^t = 0, Q_n^t = Q_n / sqrt(t)
};

TransformedPolys transformed_polys(const OperatorContext& ctx, int N,
                                   const IntegrationSpec& spec = {});

/// f(x) + lambda (x-c1) T_rho(f)(x) = g(x). Construction validates the
/// family member t = 1/(1+lambda) and throws InvalidParameter if it fails.
class IntegralEquationProblem {
 public:
  IntegralEquationProblem(const Reducer& rho, double lambda, RealFunction g);

  const Measure& rho() const { return context_->rho(); }
  double lambda() const { return lambda_; }
  double t() const { return 1.0 / (1.0 + lambda_); }
  const RealFunction& g() const { return g_; }
  const OperatorContext& context() const { return *context_; }

 private:
  double lambda_;
  RealFunction g_;
  std::shared_ptr<const OperatorContext> context_;
};

/// g(x) - (lambda/(1+lambda)) (x-c1) T_{rho_{1/(1+lambda)}}(g)(x)
double solve_integral_equation(const IntegralEquationProblem& problem, double x,
                               const IntegrationSpec& spec = {});

/// The solution as a function object. `problem` must outlive the result.
RealFunction solution(const IntegralEquationProblem& problem, const IntegrationSpec& spec = {});

/// f(x) + lambda (x-c1) T_rho(f)(x) - g(x) on a 30-point grid; passes iff the
/// largest residual is below 1e-5.
VerificationReport residual_check(const IntegralEquationProblem& problem, const RealFunction& f,
                                  const IntegrationSpec& spec = {});

/// x -> (x - c1) f(x)
RealFunction shift_multiply(RealFunction f, double c1);

/// T_{rho_t} T_{rho_s} (x-c1) f against (s T_{rho_s} f - t T_{rho_t} f)/(s-t)
/// on a 20-point grid; passes iff the largest gap is below 1e-5.
VerificationReport barycentric_check(const Reducer& rho, double t, double s, const RealFunction& f,
                                     const IntegrationSpec& spec = {});

/// V^s_{rho_t}(V^t_rho f) against V^{ts}_rho f on a 20-point grid (1e-5).
VerificationReport composition_check(const Reducer& rho, double t, double s, const RealFunction& f,
                                     const IntegrationSpec& spec = {});

/// (z-c1) S^t S^s = (t S^t - s S^s)/(t-s) with S^u the family transform (1e-8).
VerificationReport transform_relation_check(const Measure& rho, double t, double s, Complex z,
                                            const IntegrationSpec& spec = {});

}  // namespace secm
