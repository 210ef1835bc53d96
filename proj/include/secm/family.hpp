#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secm/stieltjes.hpp"
#include "secm/verification.hpp"

namespace secm {

/// proven: t in (0, 1]. empirical: t > 1 that passed the real-axis root scan
/// and the mass check. invalid: t > 1 that failed either. unchecked: t > 1
/// used without running the policy.
enum class Validity { proven, empirical, invalid, unchecked };

std::string_view to_string(Validity v);

struct FamilyParameter {
  double t = 1.0;
  Validity validity = Validity::proven;
  std::string note;

  bool usable() const { return validity == Validity::proven || validity == Validity::empirical; }
};

/// Runs the validity policy. Throws InvalidParameter unless t > 0 and finite.
/// For t > 1 it scans [b + 1e-3 |I|, b + 10 |I|] and its mirror on the left
/// for real roots of the transform denominator, then requires |f(t) - 1| < 1e-6.
FamilyParameter validate_parameter(const Reducer& base, double t);

/// rho_t(x) = t rho / ([(t-1)(x-c1) phi/2 - t]^2 + pi^2 rho^2 (t-1)^2 (x-c1)^2).
/// c1 is the base mean; the base reducer is shared and memoized.
class FamilyDensity final : public Measure {
 public:
  FamilyDensity(Reducer base, FamilyParameter param);

  /// Runs validate_parameter() first.
  static std::shared_ptr<const FamilyDensity> make(const Reducer& base, double t);
  /// Skips the policy for t > 1 (validity = unchecked).
  static std::shared_ptr<const FamilyDensity> make_unchecked(const Reducer& base, double t);

  const Interval& interval() const override { return base_.measure().interval(); }
  double at(const Abscissa& p) const override;
  double mean() const override { return c1_; }
  std::string name() const override;
  std::vector<Abscissa> breakpoints() const override;

  double t() const { return param_.t; }
  double c1() const { return c1_; }
  const FamilyParameter& parameter() const { return param_; }
  const Reducer& base_reducer() const { return base_; }
  const Measure& base() const { return base_.measure(); }

 private:
  Reducer base_;
  FamilyParameter param_;
  double c1_;
};

double family_density(const Measure& rho, double t, double x, const IntegrationSpec& spec = {});

/// S_rho(z) / (t + (1-t)(z-c1) S_rho(z)). Throws DenominatorZero when the
/// denominator falls below 1e-14 in modulus.
Complex family_transform(const Measure& rho, double t, Complex z, const IntegrationSpec& spec = {});

/// f(t) = int rho_t.
double moment0_curve(const Reducer& base, double t);
double moment0_curve(std::shared_ptr<const Measure> rho, double t, const IntegrationSpec& spec = {});

struct RootBracket {
  double lo;
  double hi;
};

/// Sign changes of D(x) = t + (1-t)(x-c1) S_rho(x) on a grid over `search`
/// (geometric in the distance to the support), bisected to width 1e-10.
/// Throws InputError if `search` meets the support, t <= 0 or t == 1.
std::vector<RootBracket> denominator_root_scan(const Measure& rho, double t,
                                               const Interval& search, int grid_points = 400,
                                               const IntegrationSpec& spec = {});

/// The two real search intervals the validity policy scans.
std::vector<Interval> default_root_search(const Interval& support);

/// Secondary measure of rho_t against t mu on a 30-point grid (1e-4) and
/// c'_2 - c'_1^2 = t (c_2 - c_1^2) (1e-6).
VerificationReport equi_normality_check(std::shared_ptr<const Measure> rho, double t,
                                        const IntegrationSpec& spec = {});

/// int g rho_t -> g(c1) along a decreasing t ladder, with errors shrinking and
/// a final gap below 5e-2; the reducer of rho_t must approach 2/(x - c1) at two
/// fixed points. Metrics hold the convergence table.
VerificationReport dirac_limit_check(std::shared_ptr<const Measure> rho, const RealFunction& g,
                                     std::vector<double> t_ladder = {0.2, 0.1, 0.05, 0.02},
                                     const IntegrationSpec& spec = {});

}  // namespace secm
