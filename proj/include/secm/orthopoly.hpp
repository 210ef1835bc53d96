#pragma once

#include "secm/measures.hpp"
#include "secm/polynomial.hpp"

namespace secm {

/// Three-term recurrence x P_n = b_{n+1} P_{n+1} + a_n P_n + b_n P_{n-1}.
/// `a` holds a_0..a_{N-1}; `b` holds b_0..b_N with b_0 = 0 unused, so the
/// coefficients generate P_0..P_N. `mass` is the total mass (P_0 = 1/sqrt(mass)).
struct RecurrenceCoefficients {
  std::vector<double> a;
  std::vector<double> b;
  double mass = 1.0;

  int degree() const { return static_cast<int>(a.size()); }
};

inline constexpr int kDefaultMaxDegree = 20;

/// Discretized Stieltjes procedure on a tanh-sinh rule of the measure, refined
/// until the coefficients settle. Throws InstabilityDetected if some b_n^2 <= 0
/// or the discrete Gram matrix drifts from the identity by more than 1e-6.
RecurrenceCoefficients recurrence_coefficients(const Measure& rho, int degree,
                                               const IntegrationSpec& spec = {},
                                               int max_degree = kDefaultMaxDegree);

PolynomialSequence orthonormal_polys(const RecurrenceCoefficients& coeffs);

/// Q_0 = 0, Q_1 = 1/sqrt(d0), then the P_n recurrence.
PolynomialSequence secondary_polys(const RecurrenceCoefficients& coeffs, double d0);

/// T_rho(f)(x) = int (f(u) - f(x)) / (u - x) rho(u) du.
double apply_T(const Measure& rho, const RealFunction& f, double x,
               const IntegrationSpec& spec = {});

/// x -> T_rho(f)(x) as a function object. `rho` must outlive the result.
RealFunction T_image(const Measure& rho, RealFunction f, const IntegrationSpec& spec = {});

struct MuFamilies {
  PolynomialSequence A;  // A_n = Q_{n+1}, orthonormal for mu
  PolynomialSequence B;  // B_n = (x - c1) Q_{n+1} - P_{n+1}
};

/// Uses P_1..P_N and Q_1..Q_N, so A and B have N entries.
MuFamilies mu_families(const PolynomialSequence& P, const PolynomialSequence& Q, double c1);

/// Families for the normalized secondary measure mu/d0: sqrt(d0) A_n, B_n / sqrt(d0).
MuFamilies normalized_mu_families(const MuFamilies& families, double d0);

}  // namespace secm
