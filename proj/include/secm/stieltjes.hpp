#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "secm/measures.hpp"

namespace secm {

using Complex = std::complex<double>;
using Transform = std::function<Complex(Complex)>;

/// S_rho(z) = int rho(t) / (z - t) dt for z off the support. Throws
/// PointOnInterval when z lies within 1e-12 of the interval.
Complex stieltjes_transform(const Measure& rho, Complex z, const IntegrationSpec& spec = {});

/// Reducer phi(x) = 2 PV int rho(t) / (x - t) dt.
double reducer(const Measure& rho, double x, const IntegrationSpec& spec = {});
double reducer(const Measure& rho, const Abscissa& p, const IntegrationSpec& spec = {});

/// Memoized reducer of one measure at one accuracy. Copies share the memo, so
/// a family sweep over t reuses every phi(x) already computed. Thread-safe.
class Reducer {
 public:
  explicit Reducer(std::shared_ptr<const Measure> rho, const IntegrationSpec& spec = {});

  double operator()(const Abscissa& p) const;
  double operator()(double x) const;

  const Measure& measure() const { return *rho_; }
  const std::shared_ptr<const Measure>& measure_ptr() const { return rho_; }
  const IntegrationSpec& spec() const { return spec_; }
  std::size_t cached() const;

 private:
  struct Memo;
  std::shared_ptr<const Measure> rho_;
  IntegrationSpec spec_;
  std::shared_ptr<Memo> memo_;
};

/// Phi(x, 1, -1/2) = sum_{n>=0} x^n / (n - 1/2) for 0 < x < 1, via the closed
/// form -2 + 2 sqrt(x) artanh(sqrt(x)).
double lerch_phi_half(double x);

/// mu(x) = rho(x) / (phi(x)^2 / 4 + pi^2 rho(x)^2), optionally scaled.
class SecondaryMeasure final : public Measure {
 public:
  SecondaryMeasure(Reducer reducer, double scale, std::string name);

  const Interval& interval() const override { return reducer_.measure().interval(); }
  double at(const Abscissa& p) const override;
  /// Computed on first use; copies share the cached value.
  double mean() const override;
  std::string name() const override { return name_; }
  std::vector<Abscissa> breakpoints() const override { return reducer_.measure().breakpoints(); }

  double scale() const { return scale_; }

 private:
  Reducer reducer_;
  double scale_;
  std::string name_;
  struct MeanCache;
  std::shared_ptr<MeanCache> mean_;
};

struct SecondaryMeasureData {
  std::shared_ptr<const Measure> base;
  double c1 = 0.0;
  double c2 = 0.0;
  double d0 = 0.0;  // c2 - c1^2, the mass of mu
  std::shared_ptr<const SecondaryMeasure> mu;
  std::shared_ptr<const SecondaryMeasure> mu0;  // mu / d0
};

/// Throws DegenerateMeasure if d0 <= 1e-12.
SecondaryMeasureData secondary_measure(std::shared_ptr<const Measure> rho,
                                       const IntegrationSpec& spec = {});

/// S_mu(z) = z - c1 - 1/S_rho(z). Throws TransformZero if |S_rho(z)| < 1e-14.
Complex secondary_transform(const Measure& rho, Complex z, const IntegrationSpec& spec = {});

/// 1e-2 * 2^-k for k = 0..8.
std::vector<double> default_eps_ladder();

struct PerronEstimate {
  double value = 0.0;
  double error = 0.0;
  double imag_residue = 0.0;
  std::vector<double> raw;  // unextrapolated estimates along the ladder
};

/// Stieltjes-Perron inversion: Richardson-extrapolated limit of
/// (S(x - i eps) - S(x + i eps)) / (2 i pi) along a geometric eps ladder.
/// Throws ExtrapolationDivergence when the extrapolants do not settle or the
/// limit keeps an imaginary part above 1e-6.
PerronEstimate perron_invert(const Transform& S, double x,
                             std::span<const double> eps_ladder = {});

}  // namespace secm
