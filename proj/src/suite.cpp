#include "secm/suite.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "secm/errors.hpp"
#include "secm/expr.hpp"
#include "secm/operators.hpp"

namespace secm {

namespace {

using std::numbers::pi;

struct Check {
  const char* id;
  bool quick;
  std::function<VerificationReport()> run;
};

std::shared_ptr<const Measure> shared(std::string_view name) {
  return std::make_shared<const Density>(catalog(name));
}

Complex sqrt_cut(Complex z) { return std::sqrt(z - 1.0) * std::sqrt(z + 1.0); }

Complex cheb_family_transform(double t, Complex z) {
  return 2.0 / ((2.0 - t) * z + t * sqrt_cut(z));
}

/// Runs `body`, times it and turns library errors into failed reports.
VerificationReport timed(std::string id, double tolerance, Provenance provenance,
                         const std::function<void(VerificationReport&)>& body) {
  const Stopwatch clock;
  VerificationReport r;
  r.check_id = std::move(id);
  r.tolerance = tolerance;
  r.provenance = provenance;
  try {
    body(r);
  } catch (const Error& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport numeric(std::string id, double expected, double tolerance,
                           Provenance provenance, const std::function<double()>& compute) {
  return timed(std::move(id), tolerance, provenance, [&](VerificationReport& r) {
    r.expected = expected;
    r.computed = compute();
    r.pass = std::abs(r.computed - expected) <= tolerance;
  });
}

VerificationReport max_gap(std::string id, double tolerance, Provenance provenance,
                           const std::vector<double>& grid,
                           const std::function<double(double)>& gap) {
  return timed(std::move(id), tolerance, provenance, [&](VerificationReport& r) {
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(gap(x)));
    r.computed = worst;
    r.pass = std::isfinite(worst) && worst <= tolerance;
  });
}

std::vector<Complex> sample_points(const Interval& support, std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> re(support.a - support.width(),
                                            support.b + support.width());
  std::uniform_real_distribution<double> im(0.1, 1.5);
  std::bernoulli_distribution flip(0.5);
  std::vector<Complex> zs;
  while (static_cast<int>(zs.size()) < count) {
    const double y = flip(rng) ? im(rng) : -im(rng);
    zs.emplace_back(re(rng), y);
  }
  return zs;
}

std::vector<Check> checks(const IntegrationSpec& spec, std::uint64_t seed) {
  std::vector<Check> out;
  const auto grid50 = [](const Interval& I) { return interior_grid(I, 50, 0.0); };

  // Reducer closed forms.
  out.push_back({"reducer-cheb-u", true, [=] {
                   const auto rho = shared("cheb-u");
                   return max_gap("reducer-cheb-u", 1e-7, Provenance::paper,
                                  grid50(rho->interval()),
                                  [&](double x) { return reducer(*rho, x, spec) - 4.0 * x; });
                 }});
  out.push_back({"reducer-uniform", true, [=] {
                   const auto rho = shared("uniform");
                   return max_gap("reducer-uniform", 1e-7, Provenance::paper,
                                  grid50(rho->interval()), [&](double x) {
                                    return reducer(*rho, x, spec) - 2.0 * std::log(x / (1.0 - x));
                                  });
                 }});
  out.push_back({"reducer-linear2x", true, [=] {
                   const auto rho = shared("linear2x");
                   return max_gap("reducer-linear2x", 1e-7, Provenance::paper,
                                  grid50(rho->interval()), [&](double x) {
                                    return reducer(*rho, x, spec) -
                                           (-4.0 * x * std::log((1.0 - x) / x) - 4.0);
                                  });
                 }});
  out.push_back({"reducer-sqrt32", true, [=] {
                   const auto rho = shared("sqrt32");
                   return max_gap("reducer-sqrt32", 1e-7, Provenance::paper,
                                  grid50(rho->interval()), [&](double x) {
                                    return reducer(*rho, x, spec) - 3.0 * lerch_phi_half(x);
                                  });
                 }});

  // Stieltjes transforms and the secondary measure.
  out.push_back({"transform-cheb-u-z2", true, [=] {
                   return numeric("transform-cheb-u-z2", 2.0 * (2.0 - std::sqrt(3.0)), 1e-8,
                                  Provenance::paper, [&] {
                                    return stieltjes_transform(catalog("cheb-u"), 2.0, spec).real();
                                  });
                 }});
  out.push_back({"transform-cheb-t-z2", true, [=] {
                   return numeric("transform-cheb-t-z2", 1.0 / std::sqrt(3.0), 1e-8,
                                  Provenance::paper, [&] {
                                    return stieltjes_transform(catalog("cheb-t"), 2.0, spec).real();
                                  });
                 }});
  out.push_back({"secondary-cheb-u", false, [=] {
                   const auto data = secondary_measure(shared("cheb-u"), spec);
                   return max_gap("secondary-cheb-u", 1e-8, Provenance::paper,
                                  grid50(data.base->interval()), [&](double x) {
                                    return (*data.mu)(x) - 0.25 * (*data.base)(x);
                                  });
                 }});
  out.push_back({"secondary-uniform", false, [=] {
                   const auto data = secondary_measure(shared("uniform"), spec);
                   return max_gap("secondary-uniform", 1e-8, Provenance::paper,
                                  grid50(data.base->interval()), [&](double x) {
                                    const double l = std::log(x / (1.0 - x));
                                    return (*data.mu)(x) - 1.0 / (l * l + pi * pi);
                                  });
                 }});

  // Moment-0 curve.
  struct Curve {
    const char* density;
    double t;
    double value;
  };
  for (const Curve c : {Curve{"uniform", 1.3, 0.9799849175}, Curve{"sqrt32", 2.0, 0.7496041742},
                        Curve{"sqrt32", 1.24, 0.9911159300}, Curve{"sqrt32", 0.6, 1.0},
                        Curve{"linear2x", 0.45, 1.0}, Curve{"cheb-u", 0.3, 1.0},
                        Curve{"cheb-u", 1.0, 1.0}, Curve{"cheb-u", 1.7, 1.0},
                        Curve{"cheb-u", 2.0, 1.0}}) {
    std::string id = std::string("moment0-") + c.density + "-t" + std::to_string(c.t).substr(0, 4);
    out.push_back({"moment0", c.t == 1.3 || c.t == 2.0, [=] {
                     return numeric(id, c.value, 1e-6, Provenance::paper,
                                    [&] { return moment0_curve(shared(c.density), c.t, spec); });
                   }});
  }

  // Chebyshev family closed forms.
  out.push_back({"family-cheb-u-density", false, [=] {
                   const Reducer base(shared("cheb-u"), spec);
                   const Interval I(-1.0, 1.0);
                   double worst = 0.0;
                   return timed("family-cheb-u-density", 1e-7, Provenance::paper,
                                [&](VerificationReport& r) {
                                  for (double t : {0.5, 4.0 / 3.0, 1.7, 2.0}) {
                                    const auto rho_t = FamilyDensity::make_unchecked(base, t);
                                    for (double x : grid50(I)) {
                                      const double closed = 2.0 * t * std::sqrt(1.0 - x * x) /
                                                            (pi * (t * t + 4.0 * (1.0 - t) * x * x));
                                      worst = std::max(worst, std::abs((*rho_t)(x) - closed));
                                    }
                                  }
                                  r.computed = worst;
                                  r.pass = worst <= r.tolerance;
                                });
                 }});
  out.push_back({"family-cheb-u-t2-is-cheb-t", true, [=] {
                   const Reducer base(shared("cheb-u"), spec);
                   const auto rho_t = FamilyDensity::make_unchecked(base, 2.0);
                   return max_gap("family-cheb-u-t2-is-cheb-t", 1e-7, Provenance::paper,
                                  grid50(rho_t->interval()), [&](double x) {
                                    return (*rho_t)(x) - 1.0 / (pi * std::sqrt(1.0 - x * x));
                                  });
                 }});
  out.push_back({"family-cheb-u-reducer", false, [=] {
                   const Reducer base(shared("cheb-u"), spec);
                   return timed("family-cheb-u-reducer", 1e-7, Provenance::paper,
                                [&](VerificationReport& r) {
                                  double worst = 0.0;
                                  for (double t : {0.5, 4.0 / 3.0, 2.0}) {
                                    const Reducer phi_t(FamilyDensity::make_unchecked(base, t), spec);
                                    for (double x : grid50(Interval(-1.0, 1.0))) {
                                      const double closed = 2.0 * (4.0 - 2.0 * t) * x /
                                                            (t * t + 4.0 * (1.0 - t) * x * x);
                                      worst = std::max(worst, std::abs(phi_t(x) - closed));
                                    }
                                  }
                                  r.computed = worst;
                                  r.pass = worst <= r.tolerance;
                                });
                 }});
  out.push_back({"family-cheb-u-transform", true, [=] {
                   return timed("family-cheb-u-transform", 1e-7, Provenance::paper,
                                [&](VerificationReport& r) {
                                  const Density rho = catalog("cheb-u");
                                  double worst = 0.0;
                                  for (double t : {0.5, 1.5, 2.0}) {
                                    for (Complex z : {Complex(2.0, 0.0), Complex(-1.5, 0.0),
                                                      Complex(0.3, 0.7), Complex(0.0, 3.0)}) {
                                      worst = std::max(worst,
                                                       std::abs(family_transform(rho, t, z, spec) -
                                                                cheb_family_transform(t, z)));
                                    }
                                  }
                                  r.computed = worst;
                                  r.pass = worst <= r.tolerance;
                                });
                 }});

  // Equi-normality moment identity.
  for (double t : {0.25, 0.5, 0.75}) {
    out.push_back({"equi-normal", t == 0.5, [=] {
                     const auto rep = equi_normality_check(shared("uniform"), t, spec);
                     VerificationReport r = numeric_report(
                         "equi-normal-uniform-c2-t" + std::to_string(t).substr(0, 4),
                         (t + 3.0) / 12.0, rep.metrics.empty() ? NAN : rep.metric("c2_t"), 1e-6,
                         Provenance::paper);
                     r.pass = r.pass && rep.pass;
                     r.runtime_ms = rep.runtime_ms;
                     r.detail = rep.detail;
                     return r;
                   }});
  }

  // Denominator roots.
  out.push_back({"roots-none-for-small-t", false, [=] {
                   return timed("roots-none-for-small-t", 0.0, Provenance::paper,
                                [&](VerificationReport& r) {
                                  double found = 0.0;
                                  for (const char* name : {"cheb-u", "uniform", "linear2x", "sqrt32"}) {
                                    const Density rho = catalog(name);
                                    for (double t : {0.3, 0.6, 0.9}) {
                                      for (const Interval& search : default_root_search(rho.interval())) {
                                        found += static_cast<double>(
                                            denominator_root_scan(rho, t, search, 400, spec).size());
                                      }
                                    }
                                  }
                                  r.expected = 0.0;
                                  r.computed = found;
                                  r.pass = found == 0.0;
                                });
                 }});
  out.push_back({"roots-cheb-u-t3", true, [=] {
                   return timed("roots-cheb-u-t3", 5e-3, Provenance::paper,
                                [&](VerificationReport& r) {
                                  const auto roots = denominator_root_scan(
                                      catalog("cheb-u"), 3.0, Interval(1.001, 5.0), 400, spec);
                                  r.expected = 1.065;
                                  r.computed = roots.size() == 1 ? roots[0].lo : NAN;
                                  r.pass = roots.size() == 1 && roots[0].lo > 1.06 && roots[0].hi < 1.07;
                                  r.detail = std::to_string(roots.size()) + " bracket(s)";
                                });
                 }});

  // Operators.
  out.push_back({"isometry-cheb-u-t1.35", true, [=] {
                   return timed("isometry-cheb-u-t1.35", 1e-6, Provenance::paper,
                                [&](VerificationReport& r) {
                                  const OperatorContext ctx(shared("cheb-u"), 1.35, spec);
                                  const auto f = parse("x^3-2/(x+5)+1/(x^2+3)").function_object();
                                  const auto rep = isometry_check(ctx, f, spec);
                                  const double L = rep.metric("L");
                                  const double R = rep.metric("R");
                                  r.expected = 0.10100202639029552;
                                  r.computed = R;
                                  r.pass = rep.pass && std::abs(L - *r.expected) <= 1e-6 &&
                                           std::abs(R - *r.expected) <= 1e-6;
                                  r.metrics = rep.metrics;
                                });
                 }});
  for (const char* g : {"2*x^11-7*x^10+8*x^5-3*x+2", "1/(1+x^2)", "x^3/(x+2)", "1/(x+3)^2"}) {
    out.push_back({"round-trip", std::string_view(g) == "1/(1+x^2)", [=] {
                     const Reducer base(shared("cheb-u"), spec);
                     const IntegralEquationProblem problem(base, -0.5, parse(g).function_object());
                     VerificationReport r = residual_check(problem, solution(problem, spec), spec);
                     r.check_id = std::string("round-trip ") + g;
                     return r;
                   }});
  }
  out.push_back({"barycentric-cheb-u", false, [=] {
                   return timed("barycentric-cheb-u", 1e-5, Provenance::paper,
                                [&](VerificationReport& r) {
                                  const Reducer base(shared("cheb-u"), spec);
                                  const auto rho1 = FamilyDensity::make(base, 1.0);
                                  const auto rho2 = FamilyDensity::make(base, 2.0);
                                  const auto f = parse("7*x^5-4*x^3+x/(x^2+3)").function_object();
                                  const RealFunction inner =
                                      T_image(*rho1, shift_multiply(f, 0.0), spec);
                                  double worst = 0.0;
                                  for (double x : interior_grid(Interval(-1.0, 1.0), 20, 0.0)) {
                                    const double x2 = x * x;
                                    const double closed =
                                        (41 * x2 - 24 * std::sqrt(3.0) + 81 + 56 * x2 * x2 * x2 +
                                         178 * x2 * x2) /
                                        (8 * (x2 + 3));
                                    const double lhs = apply_T(*rho2, inner, x, spec);
                                    const double rhs = 2.0 * apply_T(*rho2, f, x, spec) -
                                                       apply_T(*rho1, f, x, spec);
                                    worst = std::max({worst, std::abs(lhs - closed),
                                                      std::abs(rhs - closed)});
                                  }
                                  r.computed = worst;
                                  r.pass = worst <= r.tolerance;
                                });
                 }});
  out.push_back({"transform-relation", true, [=] {
                   return timed("transform-relation", 1e-8, Provenance::paper,
                                [&](VerificationReport& r) {
                                  std::mt19937_64 rng(seed);
                                  double worst = 0.0;
                                  const Density cheb = catalog("cheb-u");
                                  for (Complex z : sample_points(cheb.interval(), rng, 10)) {
                                    const Complex s1 = cheb_family_transform(1.0, z);
                                    const Complex s2 = cheb_family_transform(2.0, z);
                                    worst = std::max(worst, std::abs(z * s1 * s2 - (s1 - 2.0 * s2) / -1.0));
                                    const auto rep = transform_relation_check(cheb, 1.0, 2.0, z, spec);
                                    worst = std::max(worst, rep.computed);
                                  }
                                  const Density uniform = catalog("uniform");
                                  for (Complex z : sample_points(uniform.interval(), rng, 10)) {
                                    const auto rep = transform_relation_check(uniform, 0.5, 0.9, z, spec);
                                    worst = std::max(worst, rep.computed);
                                  }
                                  r.computed = worst;
                                  r.pass = worst <= r.tolerance;
                                });
                 }});
  return out;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "paper") return Suite::paper;
  if (name == "quick") return Suite::quick;
  throw InputError("unknown suite '" + std::string(name) + "' (expected paper or quick)");
}

std::vector<VerificationReport> run_suite(Suite suite, const IntegrationSpec& spec,
                                          std::uint64_t seed) {
  spec.validate();
  std::vector<VerificationReport> reports;
  for (const Check& check : checks(spec, seed)) {
    if (suite == Suite::quick && !check.quick) continue;
    reports.push_back(check.run());
  }
  return reports;
}

}  // namespace secm
