#include "secm/stieltjes.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "secm/errors.hpp"

namespace secm {

namespace {

double distance_to_interval(const Interval& interval, Complex z) {
  double dx = 0.0;
  if (z.real() < interval.a) dx = interval.a - z.real();
  if (z.real() > interval.b) dx = z.real() - interval.b;
  return std::hypot(dx, z.imag());
}

}  // namespace

Complex stieltjes_transform(const Measure& rho, Complex z, const IntegrationSpec& spec) {
  const Interval& interval = rho.interval();
  if (distance_to_interval(interval, z) < 1e-12) {
    std::ostringstream msg;
    msg << "Stieltjes transform evaluated at " << z << ", on the support";
    throw PointOnInterval(msg.str());
  }
  std::vector<Abscissa> breaks = rho.breakpoints();
  const double re = z.real();
  const bool over = interval.contains_open(re);
  if (over && std::abs(z.imag()) < interval.width()) breaks.push_back(Abscissa::at(interval, re));

  const LocatedComplexFunction integrand = [&](const Abscissa& p) -> Complex {
    const double w = rho.at(p);
    if (w == 0.0) return {};
    // Real part of z - t from whichever reference point keeps it exact.
    double gap;
    if (re >= interval.b) {
      gap = (re - interval.b) + p.to_b;
    } else if (re <= interval.a) {
      gap = (re - interval.a) - p.from_a;
    } else {
      gap = re - p.x;
    }
    return w / Complex(gap, z.imag());
  };
  return integrate_located(integrand, interval, breaks, spec).value;
}

double reducer(const Measure& rho, const Abscissa& p, const IntegrationSpec& spec) {
  const LocatedFunction w = [&rho](const Abscissa& q) { return rho.at(q); };
  const std::vector<Abscissa> breaks = rho.breakpoints();
  return 2.0 * principal_value_located(w, p, rho.interval(), breaks, spec).value;
}

double reducer(const Measure& rho, double x, const IntegrationSpec& spec) {
  if (!rho.interval().contains_open(x)) {
    std::ostringstream msg;
    msg << "reducer needs an interior point, got " << x;
    throw PoleOutsideInterval(msg.str());
  }
  return reducer(rho, Abscissa::at(rho.interval(), x), spec);
}

struct Reducer::Memo {
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  mutable std::shared_mutex mutex;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, double, KeyHash> values;
};

Reducer::Reducer(std::shared_ptr<const Measure> rho, const IntegrationSpec& spec)
    : rho_(std::move(rho)), spec_(spec), memo_(std::make_shared<Memo>()) {
  if (!rho_) throw InputError("reducer needs a measure");
  spec_.validate();
}

double Reducer::operator()(const Abscissa& p) const {
  const std::pair key{std::bit_cast<std::uint64_t>(p.from_a), std::bit_cast<std::uint64_t>(p.to_b)};
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
  }
  const double value = reducer(*rho_, p, spec_);
  std::unique_lock lock(memo_->mutex);
  memo_->values.emplace(key, value);
  return value;
}

double Reducer::operator()(double x) const {
  if (!rho_->interval().contains_open(x)) {
    std::ostringstream msg;
    msg << "reducer needs an interior point, got " << x;
    throw PoleOutsideInterval(msg.str());
  }
  return (*this)(Abscissa::at(rho_->interval(), x));
}

std::size_t Reducer::cached() const {
  std::shared_lock lock(memo_->mutex);
  return memo_->values.size();
}

double lerch_phi_half(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << "lerch_phi_half is defined on (0, 1), got " << x;
    throw DomainError(msg.str());
  }
  const double r = std::sqrt(x);
  return -2.0 + 2.0 * r * std::atanh(r);
}

struct SecondaryMeasure::MeanCache {
  std::once_flag once;
  double value = 0.0;
};

SecondaryMeasure::SecondaryMeasure(Reducer reducer, double scale, std::string name)
    : reducer_(std::move(reducer)),
      scale_(scale),
      name_(std::move(name)),
      mean_(std::make_shared<MeanCache>()) {}

double SecondaryMeasure::mean() const {
  std::call_once(mean_->once, [this] {
    const IntegrationSpec& spec = reducer_.spec();
    const double mass = integrate_against([](double) { return 1.0; }, *this, spec).value;
    const double first = integrate_against([](double x) { return x; }, *this, spec).value;
    mean_->value = first / mass;
  });
  return mean_->value;
}

double SecondaryMeasure::at(const Abscissa& p) const {
  const double rho = reducer_.measure().at(p);
  if (rho == 0.0) return 0.0;
  const double phi = reducer_(p);
  const double pi_rho = std::numbers::pi * rho;
  return scale_ * rho / (0.25 * phi * phi + pi_rho * pi_rho);
}

SecondaryMeasureData secondary_measure(std::shared_ptr<const Measure> rho,
                                       const IntegrationSpec& spec) {
  SecondaryMeasureData data;
  data.base = rho;
  const double mass = moment(*rho, 0, spec);
  data.c1 = moment(*rho, 1, spec) / mass;
  data.c2 = moment(*rho, 2, spec) / mass;
  data.d0 = data.c2 - data.c1 * data.c1;
  if (!(data.d0 > 1e-12)) {
    std::ostringstream msg;
    msg << "secondary measure of '" << rho->name() << "' is degenerate: d0 = " << data.d0;
    throw DegenerateMeasure(msg.str());
  }
  Reducer phi(rho, spec);
  data.mu = std::make_shared<SecondaryMeasure>(phi, 1.0, "mu[" + rho->name() + "]");
  data.mu0 = std::make_shared<SecondaryMeasure>(phi, 1.0 / data.d0, "mu0[" + rho->name() + "]");
  return data;
}

Complex secondary_transform(const Measure& rho, Complex z, const IntegrationSpec& spec) {
  const Complex s = stieltjes_transform(rho, z, spec);
  if (std::abs(s) < 1e-14) throw TransformZero("Stieltjes transform vanishes at the point");
  return z - rho.mean() - 1.0 / s;
}

std::vector<double> default_eps_ladder() {
  std::vector<double> ladder;
  for (int k = 0; k <= 8; ++k) ladder.push_back(1e-2 * std::ldexp(1.0, -k));
  return ladder;
}

PerronEstimate perron_invert(const Transform& S, double x, std::span<const double> eps_ladder) {
  std::vector<double> ladder(eps_ladder.begin(), eps_ladder.end());
  if (ladder.empty()) ladder = default_eps_ladder();
  if (ladder.size() < 3) throw InputError("Perron inversion needs at least three eps values");
  const double ratio = ladder[0] / ladder[1];
  for (std::size_t k = 0; k + 1 < ladder.size(); ++k) {
    if (!(ladder[k + 1] > 0.0) || std::abs(ladder[k] / ladder[k + 1] - ratio) > 1e-9 * ratio ||
        !(ratio > 1.0)) {
      throw InputError("eps ladder must be positive, decreasing and geometric");
    }
  }

  const Complex two_i_pi(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> column;
  PerronEstimate out;
  for (double eps : ladder) {
    const Complex v = (S(Complex(x, -eps)) - S(Complex(x, eps))) / two_i_pi;
    column.push_back(v);
    out.raw.push_back(v.real());
  }

  // Richardson table; each column removes one power of eps, its order read
  // off the decay ratio of the previous column's tail.
  Complex best = column.back();
  double best_gap = std::abs(column.back() - column[column.size() - 2]);
  int order = 0;
  while (column.size() >= 3) {
    const std::size_t m = column.size();
    const double r = std::abs((column[m - 3] - column[m - 2]) / (column[m - 2] - column[m - 1]));
    int guess = std::isfinite(r) && r > 1.0
                    ? static_cast<int>(std::lround(std::log(r) / std::log(ratio)))
                    : order + 1;
    if (guess <= order || guess > order + 3) guess = order + 1;
    order = guess;
    const double factor = std::pow(ratio, order);
    std::vector<Complex> next;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      next.push_back((factor * column[i + 1] - column[i]) / (factor - 1.0));
    }
    column = std::move(next);
    const double gap = std::abs(column.back() - column[column.size() - 2]);
    if (gap < best_gap) {
      best_gap = gap;
      best = column.back();
    }
  }

  out.value = best.real();
  out.error = best_gap;
  out.imag_residue = best.imag();
  if (best_gap > 1e-3 * std::max(1.0, std::abs(out.value))) {
    std::ostringstream msg;
    msg << "Perron extrapolation at x = " << x << " did not settle (gap " << best_gap << ")";
    throw ExtrapolationDivergence(msg.str());
  }
  if (std::abs(out.imag_residue) >= 1e-6) {
    std::ostringstream msg;
    msg << "Perron limit at x = " << x << " keeps imaginary part " << out.imag_residue;
    throw ExtrapolationDivergence(msg.str());
  }
  return out;
}

}  // namespace secm
