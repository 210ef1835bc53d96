#include "secm/stieltjes.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "secm/errors.hpp"

using namespace secm;
using std::numbers::pi;

namespace {

Complex cheb_u_transform(Complex z) {
  // branch with S(z) ~ 1/z at infinity
  const Complex r = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  return 2.0 * (z - r);
}

std::shared_ptr<const Density> shared(const char* name) { return std::make_shared<Density>(catalog(name)); }

}  // namespace

TEST(Transform, ChebyshevClosedForm) {
  const Density rho = catalog("cheb-u");
  for (Complex z : {Complex(2, 0), Complex(0.3, 0.5), Complex(-1.5, -0.2), Complex(0, 3)}) {
    const Complex s = stieltjes_transform(rho, z);
    EXPECT_NEAR(std::abs(s - cheb_u_transform(z)), 0.0, 1e-10) << z;
  }
  EXPECT_NEAR(stieltjes_transform(rho, 2.0).real(), 4 - 2 * std::sqrt(3.0), 1e-12);
}

TEST(Transform, UniformClosedForm) {
  const Density rho = catalog("uniform");
  for (Complex z : {Complex(2, 0), Complex(0.5, 0.25), Complex(-0.5, 0)}) {
    EXPECT_NEAR(std::abs(stieltjes_transform(rho, z) - std::log(z / (z - 1.0))), 0.0, 1e-10) << z;
  }
}

TEST(Transform, BehavesLikeOneOverZFarAway) {
  for (const std::string& name : catalog_names()) {
    const Complex z(1e6, 0);
    EXPECT_NEAR(std::abs(z * stieltjes_transform(catalog(name), z) - 1.0), 0.0, 1e-5) << name;
  }
}

TEST(Transform, ReflectionAndHerglotz) {
  for (const std::string& name : catalog_names()) {
    const Density rho = catalog(name);
    for (Complex z : {Complex(0.4, 0.1), Complex(-2, 1), Complex(0.9, 0.01)}) {
      const Complex up = stieltjes_transform(rho, z);
      const Complex down = stieltjes_transform(rho, std::conj(z));
      EXPECT_NEAR(std::abs(down - std::conj(up)), 0.0, 1e-12) << name;
      EXPECT_LT(up.imag(), 0.0) << name;
    }
  }
}

TEST(Transform, RejectsPointsOnTheSupport) {
  EXPECT_THROW(stieltjes_transform(catalog("uniform"), Complex(0.5, 0)), PointOnInterval);
  EXPECT_THROW(stieltjes_transform(catalog("uniform"), Complex(1.0, 1e-13)), PointOnInterval);
}

TEST(Reducer, ClosedForms) {
  const Density cheb = catalog("cheb-u");
  const Density uniform = catalog("uniform");
  for (double x : {-0.9, -0.3, 0.0, 0.5, 0.99}) EXPECT_NEAR(reducer(cheb, x), 4 * x, 1e-10) << x;
  for (double x : {0.01, 0.3, 0.5, 0.8}) EXPECT_NEAR(reducer(uniform, x), 2 * std::log(x / (1 - x)), 1e-10) << x;
  EXPECT_THROW(reducer(uniform, 1.0), PoleOutsideInterval);
}

TEST(Reducer, MemoIsSharedBetweenCopies) {
  const Reducer phi(shared("uniform"));
  const Reducer copy = phi;
  EXPECT_EQ(phi.cached(), 0u);
  const double v = copy(0.3);
  EXPECT_EQ(phi.cached(), 1u);
  EXPECT_DOUBLE_EQ(phi(0.3), v);
  EXPECT_EQ(phi.cached(), 1u);
  EXPECT_THROW(phi(-0.1), PoleOutsideInterval);
  EXPECT_THROW(Reducer(nullptr), InputError);
}

TEST(Lerch, MatchesTruncatedSeries) {
  for (double x : {0.05, 0.2, 0.5}) {
    double series = 0.0;
    for (int n = 0; n < 200; ++n) series += std::pow(x, n) / (n - 0.5);
    EXPECT_NEAR(lerch_phi_half(x), series, 1e-12) << x;
  }
  EXPECT_THROW(lerch_phi_half(0.0), DomainError);
  EXPECT_THROW(lerch_phi_half(1.0), DomainError);
}

TEST(Lerch, ReducerOfSqrtDensity) {
  // sqrt32: phi(x) = 3 sqrt(x) log((1+sqrt x)/(1-sqrt x)) - 6 = 3 Phi(x, 1, -1/2)
  const Density rho = catalog("sqrt32");
  for (double x : {0.1, 0.4, 0.7}) EXPECT_NEAR(reducer(rho, x), 3 * lerch_phi_half(x), 1e-10) << x;
}

TEST(Secondary, ChebyshevIsAQuarterOfRho) {
  const auto data = secondary_measure(shared("cheb-u"));
  EXPECT_NEAR(data.d0, 0.25, 1e-12);
  EXPECT_NEAR(data.c1, 0.0, 1e-12);
  for (double x : {-0.7, 0.0, 0.4}) {
    EXPECT_NEAR((*data.mu)(x), catalog("cheb-u")(x) / 4, 1e-12);
    EXPECT_NEAR((*data.mu0)(x), catalog("cheb-u")(x), 1e-12);
  }
  EXPECT_NEAR(moment(*data.mu, 0), data.d0, 1e-8);
  EXPECT_NEAR(moment(*data.mu0, 0), 1.0, 1e-8);
}

TEST(Secondary, UniformHasMassOneTwelfth) {
  const auto data = secondary_measure(shared("uniform"));
  EXPECT_NEAR(data.d0, 1.0 / 12.0, 1e-12);
  EXPECT_NEAR(moment(*data.mu, 0), 1.0 / 12.0, 1e-8);
  const double x = 0.3;
  const double l = std::log(x / (1 - x));
  EXPECT_NEAR((*data.mu)(x), 1 / (l * l + pi * pi), 1e-10);
}

TEST(Secondary, TransformAgreesWithDirectIntegration) {
  for (const char* name : {"cheb-u", "uniform", "sqrt32"}) {
    const auto data = secondary_measure(shared(name));
    for (Complex z : {Complex(2, 0), Complex(0.5, 0.5), Complex(-1.5, 0.3)}) {
      const Complex direct = stieltjes_transform(*data.mu, z);
      const Complex via = secondary_transform(*data.base, z);
      EXPECT_NEAR(std::abs(direct - via), 0.0, 1e-8) << name << " " << z;
    }
  }
}

TEST(Secondary, DegenerateMeasureIsRejected) {
  const double w = 1e-7;
  auto narrow = std::make_shared<Density>("narrow", Interval(0, w), [w](double) { return 1 / w; });
  EXPECT_THROW(secondary_measure(narrow), DegenerateMeasure);
}

TEST(Perron, RecoversDensities) {
  for (const char* name : {"cheb-u", "uniform", "sqrt32", "linear2x"}) {
    const Density rho = catalog(name);
    const Transform S = [&rho](Complex z) { return stieltjes_transform(rho, z); };
    for (double x : interior_grid(rho.interval(), 3, 0.1)) {
      EXPECT_NEAR(perron_invert(S, x).value, rho(x), 1e-4) << name << " " << x;
    }
  }
}

TEST(Perron, RecoversSecondaryFromItsTransform) {
  auto rho = shared("uniform");
  const auto data = secondary_measure(rho);
  const Transform S = [&rho](Complex z) { return secondary_transform(*rho, z); };
  for (double x : {0.2, 0.5, 0.7}) EXPECT_NEAR(perron_invert(S, x).value, (*data.mu)(x), 1e-4);
}

TEST(Perron, DiracHasNoDensityAwayFromItsAtom) {
  const Transform S = [](Complex z) { return 1.0 / (z - 0.5); };
  EXPECT_NEAR(perron_invert(S, 0.2).value, 0.0, 1e-4);
  EXPECT_THROW(perron_invert(S, 0.5), ExtrapolationDivergence);
}

TEST(Perron, LadderValidation) {
  const Transform S = [](Complex z) { return 1.0 / z; };
  const std::vector<double> short_ladder{1e-2, 5e-3};
  EXPECT_THROW(perron_invert(S, 0.3, short_ladder), InputError);
  const std::vector<double> uneven{1e-2, 5e-3, 1e-3};
  EXPECT_THROW(perron_invert(S, 0.3, uneven), InputError);
  EXPECT_EQ(default_eps_ladder().size(), 9u);
}
