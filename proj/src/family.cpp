#include "secm/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "secm/errors.hpp"

namespace secm {

namespace {

void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << "family parameter must be a positive real, got t = " << t;
    throw InvalidParameter(msg.str());
  }
}

double denominator(const Measure& rho, double t, double x, const IntegrationSpec& spec) {
  const double s = stieltjes_transform(rho, Complex(x, 0.0), spec).real();
  return t + (1.0 - t) * (x - rho.mean()) * s;
}

}  // namespace

std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::proven:
      return "proven";
    case Validity::empirical:
      return "empirical";
    case Validity::invalid:
      return "invalid";
    case Validity::unchecked:
      return "unchecked";
  }
  return "unchecked";
}

std::vector<Interval> default_root_search(const Interval& support) {
  const double w = support.width();
  return {Interval(support.b + 1e-3 * w, support.b + 10.0 * w),
          Interval(support.a - 10.0 * w, support.a - 1e-3 * w)};
}

FamilyParameter validate_parameter(const Reducer& base, double t) {
  require_positive_t(t);
  FamilyParameter param{t, Validity::proven, "t in (0, 1]"};
  if (t <= 1.0) return param;

  const Measure& rho = base.measure();
  std::ostringstream note;
  for (const Interval& search : default_root_search(rho.interval())) {
    const std::vector<RootBracket> roots =
        denominator_root_scan(rho, t, search, 400, base.spec());
    if (!roots.empty()) {
      note << "transform denominator vanishes near x = " << roots.front().lo;
      param.validity = Validity::invalid;
      param.note = note.str();
      return param;
    }
  }
  const double mass = moment0_curve(base, t);
  if (!(std::abs(mass - 1.0) < 1e-6)) {
    note << "mass f(t) = " << mass << " differs from 1";
    param.validity = Validity::invalid;
    param.note = note.str();
    return param;
  }
  param.validity = Validity::empirical;
  param.note = "no real denominator root, unit mass";
  return param;
}

FamilyDensity::FamilyDensity(Reducer base, FamilyParameter param)
    : base_(std::move(base)), param_(std::move(param)), c1_(base_.measure().mean()) {
  require_positive_t(param_.t);
  if (param_.validity == Validity::proven && param_.t > 1.0) {
    throw InvalidParameter("validity 'proven' requires t <= 1");
  }
}

std::shared_ptr<const FamilyDensity> FamilyDensity::make(const Reducer& base, double t) {
  return std::make_shared<const FamilyDensity>(base, validate_parameter(base, t));
}

std::shared_ptr<const FamilyDensity> FamilyDensity::make_unchecked(const Reducer& base, double t) {
  require_positive_t(t);
  FamilyParameter param{t, t <= 1.0 ? Validity::proven : Validity::unchecked, ""};
  return std::make_shared<const FamilyDensity>(base, param);
}

double FamilyDensity::at(const Abscissa& p) const {
  const double rho = base_.measure().at(p);
  if (rho == 0.0) return 0.0;
  const double t = param_.t;
  if (t == 1.0) return rho;
  const double phi = base_(p);
  const double u = (t - 1.0) * (p.x - c1_);
  const double real = 0.5 * u * phi - t;
  const double imag = std::numbers::pi * rho * u;
  return t * rho / (real * real + imag * imag);
}

std::string FamilyDensity::name() const {
  std::ostringstream out;
  out << base_.measure().name() << "_t(" << param_.t << ")";
  return out.str();
}

std::vector<Abscissa> FamilyDensity::breakpoints() const {
  std::vector<Abscissa> breaks = base_.measure().breakpoints();
  const Interval& interval = base_.measure().interval();
  if (interval.contains_open(c1_)) breaks.push_back(Abscissa::at(interval, c1_));
  return breaks;
}

double family_density(const Measure& rho, double t, double x, const IntegrationSpec& spec) {
  require_positive_t(t);
  const double r = rho(x);
  if (t == 1.0 || r == 0.0) return r;
  const double phi = reducer(rho, x, spec);
  const double u = (t - 1.0) * (x - rho.mean());
  const double real = 0.5 * u * phi - t;
  const double imag = std::numbers::pi * r * u;
  return t * r / (real * real + imag * imag);
}

Complex family_transform(const Measure& rho, double t, Complex z, const IntegrationSpec& spec) {
  require_positive_t(t);
  const Complex s = stieltjes_transform(rho, z, spec);
  const Complex den = t + (1.0 - t) * (z - rho.mean()) * s;
  if (std::abs(den) < 1e-14) {
    std::ostringstream msg;
    msg << "family transform denominator vanishes at z = " << z << " for t = " << t;
    throw DenominatorZero(msg.str());
  }
  return s / den;
}

double moment0_curve(const Reducer& base, double t) {
  const auto rho_t = FamilyDensity::make_unchecked(base, t);
  return integrate_against([](double) { return 1.0; }, *rho_t, base.spec()).value;
}

double moment0_curve(std::shared_ptr<const Measure> rho, double t, const IntegrationSpec& spec) {
  return moment0_curve(Reducer(std::move(rho), spec), t);
}

std::vector<RootBracket> denominator_root_scan(const Measure& rho, double t,
                                               const Interval& search, int grid_points,
                                               const IntegrationSpec& spec) {
  require_positive_t(t);
  if (t == 1.0) throw InputError("root scan needs t != 1 (the denominator is constant)");
  if (grid_points < 2) throw InputError("root scan needs at least two grid points");
  const Interval& support = rho.interval();
  const bool right = search.a > support.b;
  if (!right && !(search.b < support.a)) {
    throw InputError("root search interval must be disjoint from the support");
  }

  // Grid geometric in the distance to the nearest endpoint of the support.
  const double near = right ? search.a - support.b : support.a - search.b;
  const double far = right ? search.b - support.b : support.a - search.a;
  const auto point = [&](double d) { return right ? support.b + d : support.a - d; };
  std::vector<double> xs;
  for (int k = 0; k < grid_points; ++k) {
    const double d = near * std::pow(far / near, static_cast<double>(k) / (grid_points - 1));
    xs.push_back(point(d));
  }
  if (!right) std::reverse(xs.begin(), xs.end());

  std::vector<RootBracket> roots;
  const auto D = [&](double x) { return denominator(rho, t, x, spec); };
  double x_prev = xs.front();
  double d_prev = D(x_prev);
  if (d_prev == 0.0) roots.push_back({x_prev, x_prev});
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const double x = xs[k];
    const double d = D(x);
    if (d == 0.0) {
      roots.push_back({x, x});
    } else if (d_prev != 0.0 && std::signbit(d) != std::signbit(d_prev)) {
      double lo = x_prev, hi = x, d_lo = d_prev;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double d_mid = D(mid);
        if (d_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(d_mid) == std::signbit(d_lo)) {
          lo = mid;
          d_lo = d_mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back({lo, hi});
    }
    x_prev = x;
    d_prev = d;
  }
  return roots;
}

VerificationReport equi_normality_check(std::shared_ptr<const Measure> rho, double t,
                                        const IntegrationSpec& spec) {
  const Stopwatch clock;
  VerificationReport report;
  report.check_id = "equi-normality";
  report.tolerance = 1e-6;
  report.provenance = Provenance::paper;
  try {
    const Reducer base(rho, spec);
    const auto rho_t = FamilyDensity::make(base, t);
    if (!rho_t->parameter().usable()) {
      report.detail = "t = " + std::to_string(t) + " rejected: " + rho_t->parameter().note;
      report.runtime_ms = clock.elapsed_ms();
      return report;
    }
    const SecondaryMeasure mu(base, 1.0, "mu");
    const SecondaryMeasure mu_t(Reducer(rho_t, spec), 1.0, "mu_t");

    double pointwise = 0.0;
    for (double x : interior_grid(rho->interval(), 30, 0.0)) {
      pointwise = std::max(pointwise, std::abs(mu_t(x) - t * mu(x)));
    }

    const double mass = moment(*rho, 0, spec);
    const double c1 = moment(*rho, 1, spec) / mass;
    const double c2 = moment(*rho, 2, spec) / mass;
    const double c1_t = moment(*rho_t, 1, spec);
    const double c2_t = moment(*rho_t, 2, spec);
    const double lhs = c2_t - c1_t * c1_t;
    const double rhs = t * (c2 - c1 * c1);

    report.expected = rhs;
    report.computed = lhs;
    report.pass = std::abs(lhs - rhs) <= 1e-6 && pointwise <= 1e-4;
    report.metrics = {{"mass_t", moment(*rho_t, 0, spec)}, {"c1_t", c1_t}, {"c2_t", c2_t},
                      {"pointwise_dev", pointwise}, {"moment_dev", std::abs(lhs - rhs)}};
    std::ostringstream detail;
    detail << "max |mu_t - t mu| = " << pointwise << " (tol 1e-4)";
    report.detail = detail.str();
  } catch (const Error& e) {
    report.detail = e.what();
    report.pass = false;
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport dirac_limit_check(std::shared_ptr<const Measure> rho, const RealFunction& g,
                                     std::vector<double> t_ladder, const IntegrationSpec& spec) {
  const Stopwatch clock;
  VerificationReport report;
  report.check_id = "dirac-limit";
  report.tolerance = 5e-2;
  report.provenance = Provenance::paper;
  try {
    if (t_ladder.empty()) throw InputError("empty t ladder");
    for (std::size_t k = 0; k < t_ladder.size(); ++k) {
      require_positive_t(t_ladder[k]);
      if (t_ladder[k] > 1.0 || (k > 0 && !(t_ladder[k] < t_ladder[k - 1]))) {
        throw InputError("t ladder must decrease inside (0, 1]");
      }
    }
    const Reducer base(rho, spec);
    const Interval& I = rho->interval();
    const double c1 = rho->mean();
    const double target = g(c1);
    double x1 = I.a + 0.15 * I.width();
    double x2 = I.a + 0.85 * I.width();

    bool monotone = true;
    bool trend = true;
    double prev_gap = INFINITY;
    double prev_r1 = INFINITY, prev_r2 = INFINITY;
    double gap = INFINITY;
    double value = 0.0;
    for (double t : t_ladder) {
      const auto rho_t = FamilyDensity::make(base, t);
      value = integrate_against(g, *rho_t, spec).value;
      gap = std::abs(value - target);
      // Mass is exactly conserved, so an already-converged g (e.g. constant)
      // only has to stay converged.
      if (gap > prev_gap && gap > 1e-8) monotone = false;
      prev_gap = gap;

      const Reducer phi_t(rho_t, spec);
      const double r1 = std::abs(phi_t(x1) - 2.0 / (x1 - c1));
      const double r2 = std::abs(phi_t(x2) - 2.0 / (x2 - c1));
      if (r1 > prev_r1 || r2 > prev_r2) trend = false;
      prev_r1 = r1;
      prev_r2 = r2;

      report.metrics.emplace_back("value@" + std::to_string(t), value);
      report.metrics.emplace_back("gap@" + std::to_string(t), gap);
      report.metrics.emplace_back("reducer_gap@" + std::to_string(t), std::max(r1, r2));
    }
    report.expected = target;
    report.computed = value;
    report.pass = monotone && trend && gap < 5e-2;
    std::ostringstream detail;
    detail << "final gap " << gap << (monotone ? "" : ", gaps not decreasing")
           << (trend ? "" : ", reducer not approaching 2/(x - c1)");
    report.detail = detail.str();
  } catch (const Error& e) {
    report.detail = e.what();
    report.pass = false;
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace secm
