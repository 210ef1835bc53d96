#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace secm {

enum class Provenance { paper, trivial, derived };

std::string_view to_string(Provenance p);

/// Outcome of one reproduction or property check. For numeric checks
/// `expected` is set and pass == |computed - expected| <= tolerance; property
/// checks leave it empty and report their worst deviation in `computed`.
struct VerificationReport {
  std::string check_id;
  std::optional<double> expected;
  double computed = 0.0;
  double tolerance = 0.0;
  Provenance provenance = Provenance::derived;
  bool pass = false;
  std::int64_t runtime_ms = 0;
  std::string detail;
  std::vector<std::pair<std::string, double>> metrics;

  double metric(std::string_view key) const;  // throws std::out_of_range
};

VerificationReport numeric_report(std::string id, double expected, double computed,
                                  double tolerance, Provenance provenance);

/// Property check: passes when `deviation` <= tolerance.
VerificationReport property_report(std::string id, double deviation, double tolerance,
                                   Provenance provenance);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace secm
