#include "secm/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "secm/errors.hpp"

using namespace secm;
using std::numbers::pi;

namespace {

// Midpoint rule with n cells for a smooth integrand on [a, b].
double midpoint(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += f(a + (k + 0.5) * h);
  return s * h;
}

// c_n of each catalog density after a substitution that removes the endpoint
// singularity, so the midpoint rule converges at its full rate.
double moment_oracle(const std::string& name, int n) {
  const int cells = 1000000;
  if (name == "cheb-u") {
    return midpoint([n](double th) { return 2 / pi * std::pow(std::cos(th), n) * std::pow(std::sin(th), 2); },
                    0, pi, cells);
  }
  if (name == "cheb-t") {
    return midpoint([n](double th) { return std::pow(std::cos(th), n) / pi; }, 0, pi, cells);
  }
  if (name == "uniform") return midpoint([n](double x) { return std::pow(x, n); }, 0, 1, cells);
  if (name == "linear2x") return midpoint([n](double x) { return 2 * std::pow(x, n + 1); }, 0, 1, cells);
  return midpoint([n](double s) { return 3 * std::pow(s, 2 * n + 2); }, 0, 1, cells);
}

}  // namespace

TEST(Catalog, PublishedDensityValues) {
  EXPECT_NEAR(catalog("cheb-u")(0.0), 2 / pi, 1e-15);
  EXPECT_NEAR(catalog("uniform")(0.5), 1.0, 1e-15);
  EXPECT_NEAR(catalog("sqrt32")(1.0), 1.5, 1e-15);
  EXPECT_NEAR(catalog("cheb-t")(0.0), 1 / pi, 1e-15);
  EXPECT_NEAR(catalog("linear2x")(0.25), 0.5, 1e-15);
}

TEST(Catalog, UnknownNameIsRejected) {
  EXPECT_THROW(catalog("legendre"), UnknownDensity);
  EXPECT_THROW(catalog(""), UnknownDensity);
}

TEST(Catalog, EveryEntryHasUnitMassAndPositiveHankel) {
  for (const std::string& name : catalog_names()) {
    const Density rho = catalog(name);
    const auto c = moments(rho, 4);
    EXPECT_NEAR(c[0], 1.0, 1e-8) << name;
    const double det = c[0] * (c[2] * c[4] - c[3] * c[3]) - c[1] * (c[1] * c[4] - c[3] * c[2]) +
                       c[2] * (c[1] * c[3] - c[2] * c[2]);
    EXPECT_GT(det, 0.0) << name;
  }
}

TEST(Moment, PublishedFirstMoments) {
  EXPECT_NEAR(moment(catalog("cheb-u"), 1), 0.0, 1e-12);
  EXPECT_NEAR(moment(catalog("uniform"), 2), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(moment(catalog("linear2x"), 1), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(moment(catalog("sqrt32"), 1), 3.0 / 5.0, 1e-12);
  EXPECT_NEAR(catalog("sqrt32").mean(), 0.6, 1e-12);
}

TEST(Moment, MatchesMidpointOracle) {
  for (const std::string& name : catalog_names()) {
    const auto c = moments(catalog(name), 6);
    for (int n = 0; n <= 6; ++n) EXPECT_NEAR(c[n], moment_oracle(name, n), 1e-6) << name << " n=" << n;
  }
}

TEST(Moment, NegativeOrderIsRejected) {
  EXPECT_THROW(moment(catalog("uniform"), -1), InputError);
}

TEST(InnerProduct, Examples) {
  const auto one = [](double) { return 1.0; };
  const auto id = [](double x) { return x; };
  for (const std::string& name : catalog_names()) EXPECT_NEAR(inner_product(one, one, catalog(name)), 1.0, 1e-8);
  EXPECT_NEAR(inner_product(id, id, catalog("cheb-u")), 0.25, 1e-12);
  EXPECT_NEAR(inner_product(id, one, catalog("uniform")), 0.5, 1e-12);
}

TEST(MeanProject, Examples) {
  const Density cheb = catalog("cheb-u");
  const Density uniform = catalog("uniform");
  const auto constant = mean_project([](double) { return 3.5; }, uniform);
  EXPECT_NEAR(constant(0.3), 0.0, 1e-12);
  const auto x_cheb = mean_project([](double x) { return x; }, cheb);
  EXPECT_NEAR(x_cheb(0.7), 0.7, 1e-12);
  const auto x_uniform = mean_project([](double x) { return x; }, uniform);
  EXPECT_NEAR(x_uniform(0.7), 0.2, 1e-12);
}

TEST(MeanProject, RandomPolynomialsLandInTheHyperplane) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coef(-2, 2);
  for (const std::string& name : catalog_names()) {
    const Density rho = catalog(name);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<double> c(7);
      for (double& v : c) v = coef(rng);
      const RealFunction f = [c](double x) {
        double v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
      };
      const RealFunction g = mean_project(f, rho);
      EXPECT_NEAR(integrate_against(g, rho).value, 0.0, 1e-8) << name;
    }
  }
}

TEST(Density, UserDensityIsNormalizedOrRejected) {
  const Density near("near", Interval(0, 1), [](double) { return 1.004; });
  EXPECT_NEAR(moment(near, 0), 1.0, 1e-12);
  EXPECT_NEAR(near.normalization(), 1 / 1.004, 1e-12);
  EXPECT_THROW(Density("far", Interval(0, 1), [](double) { return 1.5; }), InvalidDensity);
  EXPECT_THROW(Density("negative", Interval(-1, 1), [](double x) { return 0.5 + 2 * x; }), InvalidDensity);
  const Density exact("x+1/2", Interval(0, 1), [](double x) { return x + 0.5; });
  EXPECT_DOUBLE_EQ(exact.normalization(), 1.0);
}

TEST(InteriorGrid, MidpointsAndMargins) {
  const Interval I(0, 1);
  const auto mid = interior_grid(I, 4, 0.0);
  ASSERT_EQ(mid.size(), 4u);
  EXPECT_DOUBLE_EQ(mid.front(), 0.125);
  EXPECT_DOUBLE_EQ(mid.back(), 0.875);
  const auto margin = interior_grid(I, 3, 0.1);
  EXPECT_DOUBLE_EQ(margin.front(), 0.1);
  EXPECT_DOUBLE_EQ(margin[1], 0.5);
  EXPECT_DOUBLE_EQ(margin.back(), 0.9);
}
