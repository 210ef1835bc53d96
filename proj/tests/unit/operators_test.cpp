#include "secm/operators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>

#include "secm/errors.hpp"

using namespace secm;

namespace {

std::shared_ptr<const Density> shared(const char* name) { return std::make_shared<Density>(catalog(name)); }

RealFunction as_function(const Polynomial& p) {
  return [p](double x) { return p(x); };
}

Polynomial random_polynomial(std::mt19937& rng, int degree) {
  std::uniform_real_distribution<double> coef(-1, 1);
  std::vector<double> c(degree + 1);
  for (double& v : c) v = coef(rng);
  return Polynomial(c);
}

}  // namespace

TEST(OperatorContext, RejectsUnusableParameters) {
  EXPECT_THROW(OperatorContext(shared("uniform"), 0.0), InvalidParameter);
  EXPECT_THROW(OperatorContext(shared("sqrt32"), 2.0), InvalidParameter);
  const OperatorContext ctx(shared("cheb-u"), 1.35);
  EXPECT_EQ(ctx.parameter().validity, Validity::empirical);
  EXPECT_NEAR(ctx.rho_t_tilde(0.2), ctx.rho_t()(0.2) / 1.35, 1e-15);
}

TEST(ApplyV, ConstantsAndIdentity) {
  const OperatorContext half(shared("uniform"), 0.5);
  EXPECT_NEAR(apply_V(half, [](double) { return 3.0; }, 0.3), 1.5, 1e-12);
  const OperatorContext one(shared("sqrt32"), 1.0);
  const auto f = [](double x) { return std::exp(x); };
  for (double x : {0.1, 0.5, 0.9}) EXPECT_NEAR(apply_V(one, f, x), f(x), 1e-14);
}

TEST(ApplyV, MapsOrthonormalPolynomials) {
  const OperatorContext ctx(shared("uniform"), 0.6);
  const auto P = orthonormal_polys(recurrence_coefficients(ctx.rho(), 4));
  const auto tp = transformed_polys(ctx, 4);
  for (int n = 1; n <= 4; ++n) {
    for (double x : {0.15, 0.5, 0.85}) {
      EXPECT_NEAR(apply_V(ctx, as_function(P[n]), x), std::sqrt(0.6) * tp.P[n](x), 1e-9) << n;
    }
  }
}

TEST(ApplyV, InverseUndoesV) {
  const OperatorContext ctx(shared("cheb-u"), 0.7);
  const RealFunction f = [](double x) { return 1 / (2 + x); };
  const RealFunction vf = V_image(ctx, f);
  for (double x : {-0.6, 0.0, 0.45}) EXPECT_NEAR(apply_V_inverse(ctx, vf, x), f(x), 1e-8) << x;
}

TEST(Isometry, RandomPolynomials) {
  std::mt19937 rng(11);
  for (const char* name : {"cheb-u", "uniform"}) {
    for (double t : {0.5, 0.8, 1.0}) {
      const OperatorContext ctx(shared(name), t);
      for (int trial = 0; trial < 3; ++trial) {
        const VerificationReport r = isometry_check(ctx, as_function(random_polynomial(rng, 5)));
        EXPECT_TRUE(r.pass) << name << " t=" << t << ": L=" << r.metric("L") << " R=" << r.metric("R");
      }
    }
  }
}

TEST(Isometry, ThirdOrthonormalPolynomial) {
  const OperatorContext ctx(shared("uniform"), 0.6);
  const auto P = orthonormal_polys(recurrence_coefficients(ctx.rho(), 3));
  const VerificationReport r = isometry_check(ctx, as_function(P[3]));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.metric("L"), 1.0, 1e-8);
  EXPECT_NEAR(r.metric("R"), 1.0, 1e-6);
}

TEST(TransformedPolys, IdentityAtOne) {
  const OperatorContext ctx(shared("sqrt32"), 1.0);
  const auto P = orthonormal_polys(recurrence_coefficients(ctx.rho(), 3));
  const auto tp = transformed_polys(ctx, 3);
  for (int n = 0; n <= 3; ++n) {
    for (double x : {0.2, 0.7}) EXPECT_NEAR(tp.P[n](x), P[n](x), 1e-10);
  }
}

TEST(TransformedPolys, OrthonormalForTheFamilyMember) {
  const OperatorContext ctx(shared("cheb-u"), 0.5);
  const auto tp = transformed_polys(ctx, 4);
  for (int j = 0; j <= 4; ++j) {
    for (int k = 0; k <= j; ++k) {
      const double g = inner_product(as_function(tp.P[j]), as_function(tp.P[k]), ctx.rho_t());
      EXPECT_NEAR(g, j == k ? 1.0 : 0.0, 1e-7) << j << "," << k;
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (double x : {-0.5, 0.3}) {
      EXPECT_NEAR(tp.Q[n](x), apply_T(ctx.rho_t(), as_function(tp.P[n]), x), 1e-7) << n;
    }
  }
}

TEST(Solver, ZeroLambdaAndConstants) {
  const Reducer rho(shared("uniform"));
  const IntegralEquationProblem zero(rho, 0.0, [](double x) { return std::sin(x); });
  EXPECT_DOUBLE_EQ(zero.t(), 1.0);
  EXPECT_NEAR(solve_integral_equation(zero, 0.4), std::sin(0.4), 1e-14);
  const IntegralEquationProblem constant(rho, 2.5, [](double) { return 4.0; });
  EXPECT_NEAR(solve_integral_equation(constant, 0.7), 4.0, 1e-12);
}

TEST(Solver, LambdaBelowMinusOneIsRejected) {
  const Reducer rho(shared("uniform"));
  const RealFunction g = [](double x) { return x; };
  EXPECT_THROW(IntegralEquationProblem(rho, -1.0, g), InvalidParameter);
  EXPECT_THROW(IntegralEquationProblem(rho, -2.0, g), InvalidParameter);
}

TEST(Solver, RandomRationalRightHandSides) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> coef(-1, 1);
  std::uniform_real_distribution<double> pole(2, 4);
  std::uniform_real_distribution<double> lambda(-0.5, 2);
  const Reducer rho(shared("cheb-u"));
  for (int trial = 0; trial < 10; ++trial) {
    const double p0 = coef(rng), p1 = coef(rng), p2 = coef(rng), q = pole(rng);
    const RealFunction g = [=](double x) { return (p0 + p1 * x + p2 * x * x) / (x + q); };
    const IntegralEquationProblem problem(rho, lambda(rng), g);
    const VerificationReport r = residual_check(problem, solution(problem));
    EXPECT_TRUE(r.pass) << "trial " << trial << ": " << r.detail;
  }
}

TEST(ShiftMultiply, MultipliesByShiftedX) {
  const RealFunction f = shift_multiply([](double x) { return x * x; }, 0.5);
  EXPECT_DOUBLE_EQ(f(2.0), 6.0);
  EXPECT_DOUBLE_EQ(f(0.5), 0.0);
}

TEST(Barycentric, SecondOrthonormalPolynomial) {
  const Reducer rho(shared("uniform"));
  const auto P = orthonormal_polys(recurrence_coefficients(rho.measure(), 2));
  const VerificationReport r = barycentric_check(rho, 0.5, 0.8, as_function(P[2]));
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Composition, ChainsFamilyOperators) {
  for (const char* name : {"cheb-u", "uniform"}) {
    const Reducer rho(shared(name));
    const VerificationReport r = composition_check(rho, 0.5, 0.8, [](double x) { return std::exp(x); });
    EXPECT_TRUE(r.pass) << name << ": " << r.detail;
  }
}

TEST(TransformRelation, HoldsOffTheSupport) {
  const Density rho = catalog("uniform");
  for (Complex z : {Complex(2, 0), Complex(0.5, 0.7), Complex(-1, -0.3)}) {
    const VerificationReport r = transform_relation_check(rho, 0.4, 0.9, z);
    EXPECT_TRUE(r.pass) << z;
    EXPECT_NEAR(r.metric("lhs_re"), r.metric("rhs_re"), 1e-8);
    EXPECT_NEAR(r.metric("lhs_im"), r.metric("rhs_im"), 1e-8);
  }
}
