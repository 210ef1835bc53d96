#include "secm/verification.hpp"

#include <cmath>
#include <stdexcept>

namespace secm {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::paper:
      return "paper";
    case Provenance::trivial:
      return "trivial";
    case Provenance::derived:
      return "derived";
  }
  return "derived";
}

double VerificationReport::metric(std::string_view key) const {
  for (const auto& [name, value] : metrics) {
    if (name == key) return value;
  }
  throw std::out_of_range("no metric '" + std::string(key) + "' in report " + check_id);
}

VerificationReport numeric_report(std::string id, double expected, double computed,
                                  double tolerance, Provenance provenance) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.expected = expected;
  r.computed = computed;
  r.tolerance = tolerance;
  r.provenance = provenance;
  r.pass = std::abs(computed - expected) <= tolerance;
  return r;
}

VerificationReport property_report(std::string id, double deviation, double tolerance,
                                   Provenance provenance) {
  VerificationReport r;
  r.check_id = std::move(id);
  r.computed = deviation;
  r.tolerance = tolerance;
  r.provenance = provenance;
  r.pass = std::isfinite(deviation) && deviation <= tolerance;
  return r;
}

}  // namespace secm
