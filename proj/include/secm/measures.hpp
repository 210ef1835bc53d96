#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "secm/quadrature.hpp"

namespace secm {

/// A positive density on a compact interval, evaluated at endpoint-aware
/// abscissas. Implementations are immutable and safe to share across threads.
class Measure {
 public:
  virtual ~Measure() = default;

  virtual const Interval& interval() const = 0;
  virtual double at(const Abscissa& p) const = 0;
  /// Normalized first moment int x d rho / int d rho; c_1 for a probability density.
  virtual double mean() const = 0;
  virtual std::string name() const = 0;
  /// Interior points where the density may be hard to integrate across.
  virtual std::vector<Abscissa> breakpoints() const { return {}; }

  double operator()(double x) const { return at(Abscissa::at(interval(), x)); }
};

/// Density (x-a)^alpha (b-x)^beta h(x) on [a, b].
class Density final : public Measure {
 public:
  /// Validates positivity on a 1000-point grid and the total mass: a mass
  /// within 1e-8 of one is accepted as is, within 1e-2 it is rescaled, and
  /// anything further off throws InvalidDensity.
  Density(std::string name, Interval interval, RealFunction smooth_part,
          EndpointExponents exps = {}, const IntegrationSpec& spec = {});

  const Interval& interval() const override { return interval_; }
  double at(const Abscissa& p) const override;
  double mean() const override { return mean_; }
  std::string name() const override { return name_; }

  const EndpointExponents& exponents() const { return exps_; }
  const RealFunction& smooth_part() const { return smooth_; }
  /// Factor applied to the smooth part during construction (1 unless rescaled).
  double normalization() const { return scale_; }

 private:
  std::string name_;
  Interval interval_;
  RealFunction smooth_;
  EndpointExponents exps_;
  double scale_ = 1.0;
  double mean_ = 0.0;
};

/// Catalog names: cheb-u, cheb-t, uniform, linear2x, sqrt32.
Density catalog(std::string_view name);
const std::vector<std::string>& catalog_names();

/// int f(x) rho(x) dx with the measure's endpoint behaviour handled exactly.
Estimate<double> integrate_against(const RealFunction& f, const Measure& rho,
                                   const IntegrationSpec& spec = {});

double moment(const Measure& rho, int n, const IntegrationSpec& spec = {});
std::vector<double> moments(const Measure& rho, int n_max, const IntegrationSpec& spec = {});

double inner_product(const RealFunction& f, const RealFunction& g, const Measure& rho,
                     const IntegrationSpec& spec = {});

/// f - mean_rho(f): the projection onto the rho-mean-zero hyperplane.
RealFunction mean_project(const RealFunction& f, const Measure& rho,
                          const IntegrationSpec& spec = {});

/// Evaluation points strictly inside [a + margin, b - margin], evenly spaced.
std::vector<double> interior_grid(const Interval& interval, int points, double margin_fraction);

}  // namespace secm
