// secm: secondary measures, the equi-normal family and its operators.

#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "secm/errors.hpp"

namespace {

using namespace secm::cli;

void add_density_flags(CLI::App* cmd, DensityOptions& d) {
  cmd->add_option("--density", d.name, "Catalog density: cheb-u, cheb-t, uniform, linear2x, sqrt32");
  cmd->add_option("--density-expr", d.expr, "Smooth part h(x) of a user density, e.g. \"1+x\"");
  cmd->add_option("--interval", d.interval, "Support A B for --density-expr")->expected(2);
  cmd->add_option("--alpha", d.alpha, "Exponent of (x-a) for --density-expr");
  cmd->add_option("--beta", d.beta, "Exponent of (b-x) for --density-expr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secm: secondary measures, equi-normal families and their operators"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--tol", global.tol, "Relative quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--quad-levels", global.quad_levels, "Maximum quadrature refinement levels")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for randomized checks")->capture_default_str();
  app.fallthrough();

  DensityOptions density;
  std::function<Outcome()> action;

  int n = 6;
  auto* moments_cmd = app.add_subcommand("moments", "Moments c_0..c_n");
  add_density_flags(moments_cmd, density);
  moments_cmd->add_option("--n", n, "Highest order")->capture_default_str();
  moments_cmd->callback([&] { action = [&] { return moments(global, density, n); }; });

  auto* ortho_cmd = app.add_subcommand("ortho", "Recurrence coefficients of the orthonormal polynomials");
  add_density_flags(ortho_cmd, density);
  ortho_cmd->add_option("--n", n, "Degree")->capture_default_str();
  ortho_cmd->callback([&] { action = [&] { return ortho(global, density, n); }; });

  std::vector<double> xs;
  int grid = 50;
  auto* reducer_cmd = app.add_subcommand("reducer", "Reducer phi(x) = 2 PV int rho(t)/(x-t) dt");
  add_density_flags(reducer_cmd, density);
  reducer_cmd->add_option("--x", xs, "Evaluation points (default: interior grid)");
  reducer_cmd->add_option("--grid", grid, "Grid size")->capture_default_str();
  reducer_cmd->callback([&] { action = [&] { return reducer(global, density, xs, grid); }; });

  auto* secondary_cmd = app.add_subcommand("secondary", "Secondary measure mu and mu0 = mu/d0");
  add_density_flags(secondary_cmd, density);
  secondary_cmd->add_option("--grid", grid, "Grid size")->capture_default_str();
  secondary_cmd->callback([&] { action = [&] { return secondary(global, density, grid); }; });

  auto* family_cmd = app.add_subcommand("family", "Equi-normal family rho_t");
  family_cmd->require_subcommand(1);
  double t = 1.0;
  bool unchecked = false;
  auto* fdensity_cmd = family_cmd->add_subcommand("density", "rho_t(x) on a grid");
  add_density_flags(fdensity_cmd, density);
  fdensity_cmd->add_option("--t", t, "Family parameter")->required();
  fdensity_cmd->add_option("--x", xs, "Evaluation points (default: interior grid)");
  fdensity_cmd->add_option("--grid", grid, "Grid size")->capture_default_str();
  fdensity_cmd->add_flag("--unchecked", unchecked, "Skip the validity policy for t > 1");
  fdensity_cmd->callback(
      [&] { action = [&] { return family_density(global, density, t, xs, grid, unchecked); }; });

  double t_min = 0.1, t_max = 2.0;
  int steps = 20;
  auto* scan_cmd = family_cmd->add_subcommand("scan", "Moment-0 curve f(t) = int rho_t");
  add_density_flags(scan_cmd, density);
  scan_cmd->add_option("--t-min", t_min, "First t")->capture_default_str();
  scan_cmd->add_option("--t-max", t_max, "Last t")->capture_default_str();
  scan_cmd->add_option("--steps", steps, "Number of t values")->capture_default_str();
  scan_cmd->callback(
      [&] { action = [&] { return family_scan(global, density, t_min, t_max, steps); }; });

  std::vector<double> search;
  int root_grid = 400;
  auto* roots_cmd = app.add_subcommand("roots", "Real roots of t + (1-t)(x-c1) S(x) off the support");
  add_density_flags(roots_cmd, density);
  roots_cmd->add_option("--t", t, "Family parameter")->required();
  roots_cmd->add_option("--search", search, "Search interval A B (default: both sides)")->expected(2);
  roots_cmd->add_option("--grid", root_grid, "Scan points per interval")->capture_default_str();
  roots_cmd->callback([&] { action = [&] { return roots(global, density, t, search, root_grid); }; });

  double lambda = 0.0;
  std::string g_expr;
  int solve_grid = 30;
  auto* solve_cmd = app.add_subcommand("solve", "Solve f + lambda (x-c1) T_rho f = g");
  add_density_flags(solve_cmd, density);
  solve_cmd->add_option("--lambda", lambda, "lambda (> -1)")->required();
  solve_cmd->add_option("--g", g_expr, "Right-hand side g(x)")->required();
  solve_cmd->add_option("--grid", solve_grid, "Grid size")->capture_default_str();
  solve_cmd->callback(
      [&] { action = [&] { return solve(global, density, lambda, g_expr, solve_grid); }; });

  std::string suite = "paper";
  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction suite");
  verify_cmd->add_option("--suite", suite, "paper or quick")
      ->check(CLI::IsMember({"paper", "quick"}))
      ->capture_default_str();
  verify_cmd->callback([&] { action = [&] { return verify(global, suite); }; });

  std::string input, x_col, y_col, output;
  auto* plot_cmd = app.add_subcommand("plot", "Plot two CSV columns as SVG");
  plot_cmd->add_option("--input", input, "CSV file")->required();
  plot_cmd->add_option("--x-col", x_col, "Column for the x axis")->required();
  plot_cmd->add_option("--y-col", y_col, "Column for the y axis")->required();
  plot_cmd->add_option("--output", output, "SVG file to write")->required();
  plot_cmd->callback([&] { action = [&] { return plot(input, x_col, y_col, output); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Outcome outcome = action();
    std::fwrite(outcome.output.data(), 1, outcome.output.size(), stdout);
    std::fflush(stdout);
    return outcome.exit_code;
  } catch (const secm::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const secm::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
}
