#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "secm/errors.hpp"
#include "secm/expr.hpp"
#include "secm/operators.hpp"
#include "secm/suite.hpp"
#include "secm/svg_plot.hpp"

namespace secm::cli {

namespace {

constexpr double kEndpointMargin = 1e-4;

OutputTable table_for(const GlobalOptions& g, const DensityOptions& d,
                      std::vector<std::string> columns) {
  OutputTable table;
  table.columns = std::move(columns);
  table.density = d.label();
  table.tol = g.tol;
  return table;
}

Outcome emit(const GlobalOptions& g, const OutputTable& table, int exit_code = kSuccess) {
  return {render(table, parse_format(g.format)), exit_code};
}

std::vector<double> points_or_grid(const Interval& I, const std::vector<double>& xs, int grid) {
  if (!xs.empty()) return xs;
  if (grid < 1) throw InputError("--grid must be positive");
  return interior_grid(I, grid, kEndpointMargin);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
    if (!out) throw InputError("cannot write '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::string cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

IntegrationSpec GlobalOptions::spec() const {
  IntegrationSpec s;
  s.rel_tol = tol;
  s.max_refinement_levels = quad_levels;
  s.validate();
  return s;
}

std::shared_ptr<const Measure> DensityOptions::build(const IntegrationSpec& spec) const {
  if (!name.empty() && !expr.empty()) throw InputError("give --density or --density-expr, not both");
  if (!name.empty()) {
    if (!interval.empty()) throw InputError("--interval only applies to --density-expr");
    return std::make_shared<const Density>(catalog(name));
  }
  if (expr.empty()) throw InputError("a density is required (--density NAME or --density-expr EXPR)");
  if (interval.size() != 2) throw InputError("--density-expr needs --interval A B");
  const Expr h = parse(expr);
  return std::make_shared<const Density>(expr, Interval(interval[0], interval[1]),
                                         h.function_object(), EndpointExponents{alpha, beta}, spec);
}

std::string DensityOptions::label() const { return name.empty() ? expr : name; }

Outcome moments(const GlobalOptions& g, const DensityOptions& d, int n) {
  if (n < 0) throw InputError("--n must be non-negative");
  const IntegrationSpec spec = g.spec();
  const auto rho = d.build(spec);
  OutputTable table = table_for(g, d, {"n", "c_n"});
  const std::vector<double> c = secm::moments(*rho, n, spec);
  for (int k = 0; k <= n; ++k) table.add_row({static_cast<double>(k), c[k]});
  return emit(g, table);
}

Outcome ortho(const GlobalOptions& g, const DensityOptions& d, int n) {
  const IntegrationSpec spec = g.spec();
  const auto rho = d.build(spec);
  const RecurrenceCoefficients rc = recurrence_coefficients(*rho, n, spec);
  OutputTable table = table_for(g, d, {"n", "a_n", "b_n+1"});
  for (int k = 0; k < rc.degree(); ++k) {
    table.add_row({static_cast<double>(k), rc.a[k], rc.b[k + 1]});
  }
  return emit(g, table);
}

Outcome reducer(const GlobalOptions& g, const DensityOptions& d, const std::vector<double>& xs,
                int grid) {
  const IntegrationSpec spec = g.spec();
  const auto rho = d.build(spec);
  const Reducer phi(rho, spec);
  OutputTable table = table_for(g, d, {"x", "phi"});
  for (double x : points_or_grid(rho->interval(), xs, grid)) table.add_row({x, phi(x)});
  return emit(g, table);
}

Outcome secondary(const GlobalOptions& g, const DensityOptions& d, int grid) {
  const IntegrationSpec spec = g.spec();
  const SecondaryMeasureData data = secondary_measure(d.build(spec), spec);
  const Reducer phi(data.base, spec);
  OutputTable table = table_for(g, d, {"x", "rho", "phi", "mu", "mu0"});
  for (double x : points_or_grid(data.base->interval(), {}, grid)) {
    table.add_row({x, (*data.base)(x), phi(x), (*data.mu)(x), (*data.mu0)(x)});
  }
  return emit(g, table);
}

Outcome family_density(const GlobalOptions& g, const DensityOptions& d, double t,
                       const std::vector<double>& xs, int grid, bool unchecked) {
  const IntegrationSpec spec = g.spec();
  const auto rho = d.build(spec);
  const Reducer base(rho, spec);
  const auto rho_t =
      unchecked ? FamilyDensity::make_unchecked(base, t) : FamilyDensity::make(base, t);
  if (!unchecked && !rho_t->parameter().usable()) {
    std::ostringstream msg;
    msg << "t = " << t << " is invalid for '" << d.label() << "': " << rho_t->parameter().note
        << " (pass --unchecked to evaluate anyway)";
    throw InvalidParameter(msg.str());
  }
  OutputTable table = table_for(g, d, {"x", "rho_t"});
  for (double x : points_or_grid(rho->interval(), xs, grid)) table.add_row({x, (*rho_t)(x)});
  return emit(g, table);
}

Outcome family_scan(const GlobalOptions& g, const DensityOptions& d, double t_min, double t_max,
                    int steps) {
  if (!(t_min > 0.0) || !(t_max > t_min)) throw InputError("need 0 < t-min < t-max");
  if (steps < 2) throw InputError("--steps must be at least 2");
  const IntegrationSpec spec = g.spec();
  const Reducer base(d.build(spec), spec);
  OutputTable table = table_for(g, d, {"t", "f"});
  int exit_code = kSuccess;
  for (int k = 0; k < steps; ++k) {
    const double t = t_min + (t_max - t_min) * k / (steps - 1);
    double f = NAN;
    try {
      f = moment0_curve(base, t);
    } catch (const NumericalError&) {
      exit_code = kNumerical;
    }
    table.add_row({t, f});
  }
  return emit(g, table, exit_code);
}

Outcome roots(const GlobalOptions& g, const DensityOptions& d, double t,
              const std::vector<double>& search, int grid) {
  const IntegrationSpec spec = g.spec();
  const auto rho = d.build(spec);
  std::vector<Interval> regions;
  if (search.empty()) {
    regions = default_root_search(rho->interval());
  } else if (search.size() == 2) {
    regions.emplace_back(search[0], search[1]);
  } else {
    throw InputError("--search takes two values A B");
  }
  OutputTable table = table_for(g, d, {"lo", "hi"});
  for (const Interval& region : regions) {
    for (const RootBracket& b : denominator_root_scan(*rho, t, region, grid, spec)) {
      table.add_row({b.lo, b.hi});
    }
  }
  return emit(g, table);
}

Outcome solve(const GlobalOptions& g, const DensityOptions& d, double lambda,
              const std::string& g_expr, int grid) {
  const IntegrationSpec spec = g.spec();
  const auto rho = d.build(spec);
  const Expr rhs = parse(g_expr);
  const IntegralEquationProblem problem(Reducer(rho, spec), lambda, rhs.function_object());
  const RealFunction f = solution(problem, spec);
  const double c1 = problem.context().c1();
  OutputTable table = table_for(g, d, {"x", "f", "residual"});
  double worst = 0.0;
  for (double x : points_or_grid(rho->interval(), {}, grid)) {
    const double fx = f(x);
    const double residual = fx + lambda * (x - c1) * apply_T(*rho, f, x, spec) - rhs.evaluate(x);
    worst = std::max(worst, std::abs(residual));
    table.add_row({x, fx, residual});
  }
  return emit(g, table, worst > 1e-5 ? kVerificationFailed : kSuccess);
}

Outcome verify(const GlobalOptions& g, const std::string& suite) {
  const Suite which = parse_suite(suite);
  const Format format = parse_format(g.format);
  const std::vector<VerificationReport> reports = run_suite(which, g.spec(), g.seed);
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;

  std::ostringstream out;
  if (format == Format::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json j;
      j["check_id"] = r.check_id;
      if (r.expected) {
        j["expected"] = *r.expected;
      } else {
        j["expected"] = "property";
      }
      j["computed"] = std::isfinite(r.computed) ? nlohmann::ordered_json(r.computed)
                                                  : nlohmann::ordered_json(nullptr);
      j["tolerance"] = r.tolerance;
      j["provenance"] = std::string(to_string(r.provenance));
      j["pass"] = r.pass;
      j["runtime_ms"] = r.runtime_ms;
      if (!r.detail.empty()) j["detail"] = r.detail;
      doc.push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "check_id,expected,computed,tolerance,provenance,pass,runtime_ms\n";
    for (const auto& r : reports) {
      out << r.check_id << ',' << (r.expected ? cell(*r.expected) : "property") << ','
          << cell(r.computed) << ',' << cell(r.tolerance) << ',' << to_string(r.provenance)
          << ',' << (r.pass ? "pass" : "FAIL") << ',' << r.runtime_ms << '\n';
    }
  }
  return {out.str(), all ? kSuccess : kVerificationFailed};
}

Outcome plot(const std::string& input_csv, const std::string& x_col, const std::string& y_col,
             const std::string& output_svg) {
  const OutputTable table = read_csv(read_file(input_csv));
  const std::size_t xi = table.column(x_col);
  const std::size_t yi = table.column(y_col);
  std::vector<double> xs, ys;
  for (const auto& row : table.rows) {
    xs.push_back(row[xi]);
    ys.push_back(row[yi]);
  }
  write_atomically(output_svg, render_svg(xs, ys, {y_col + " against " + x_col, x_col, y_col}));
  return {};
}

}  // namespace secm::cli
