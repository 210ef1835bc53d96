#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "secm/measures.hpp"
#include "secm/table.hpp"

namespace secm::cli {

enum ExitCode { kSuccess = 0, kVerificationFailed = 1, kUsage = 2, kNumerical = 3 };

struct GlobalOptions {
  double tol = 1e-10;
  int quad_levels = 12;
  std::string format = "csv";
  std::uint64_t seed = 1;

  IntegrationSpec spec() const;
};

struct DensityOptions {
  std::string name;
  std::string expr;
  std::vector<double> interval;
  double alpha = 0.0;
  double beta = 0.0;

  /// Catalog entry or parsed expression; throws InputError on bad flags.
  std::shared_ptr<const Measure> build(const IntegrationSpec& spec) const;
  std::string label() const;
};

/// Text for stdout plus the process exit code.
struct Outcome {
  std::string output;
  int exit_code = kSuccess;
};

Outcome moments(const GlobalOptions& g, const DensityOptions& d, int n);
Outcome ortho(const GlobalOptions& g, const DensityOptions& d, int n);
Outcome reducer(const GlobalOptions& g, const DensityOptions& d, const std::vector<double>& xs,
                int grid);
Outcome secondary(const GlobalOptions& g, const DensityOptions& d, int grid);
Outcome family_density(const GlobalOptions& g, const DensityOptions& d, double t,
                       const std::vector<double>& xs, int grid, bool unchecked);
Outcome family_scan(const GlobalOptions& g, const DensityOptions& d, double t_min, double t_max,
                    int steps);
Outcome roots(const GlobalOptions& g, const DensityOptions& d, double t,
              const std::vector<double>& search, int grid);
Outcome solve(const GlobalOptions& g, const DensityOptions& d, double lambda,
              const std::string& g_expr, int grid);
Outcome verify(const GlobalOptions& g, const std::string& suite);
/// Writes the SVG to `output_svg`; stdout stays empty.
Outcome plot(const std::string& input_csv, const std::string& x_col, const std::string& y_col,
             const std::string& output_svg);

}  // namespace secm::cli
