#include "secm/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "secm/errors.hpp"

namespace secm {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;
constexpr int kTicks = 10;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (hi > lo) return {lo, hi};
  const double pad = lo == 0.0 ? 0.5 : 0.05 * std::abs(lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string render_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                       const PlotSpec& spec) {
  if (xs.size() != ys.size()) throw InputError("plot needs as many x values as y values");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (std::isfinite(xs[k]) && std::isfinite(ys[k])) pts.emplace_back(xs[k], ys[k]);
  }
  if (pts.size() < 2) throw InputError("plot needs at least two finite points");

  auto [xmin_it, xmax_it] = std::minmax_element(
      pts.begin(), pts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  auto [ymin_it, ymax_it] = std::minmax_element(
      pts.begin(), pts.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  const Range xr = padded(xmin_it->first, xmax_it->first);
  const Range yr = padded(ymin_it->second, ymax_it->second);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  const auto py = [&](double y) { return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" "
         "height=\"600\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    svg += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" +
           escape(spec.title) + "</text>\n";
  }

  const std::string x0 = fmt("%.2f", kLeft);
  const std::string x1 = fmt("%.2f", kLeft + plot_w);
  const std::string y0 = fmt("%.2f", kTop + plot_h);
  const std::string y1 = fmt("%.2f", kTop);
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
  svg += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int k = 0; k < kTicks; ++k) {
    const double f = static_cast<double>(k) / (kTicks - 1);
    const double xv = xr.lo + f * (xr.hi - xr.lo);
    const std::string tx = fmt("%.2f", px(xv));
    svg += "<line x1=\"" + tx + "\" y1=\"" + y0 + "\" x2=\"" + tx + "\" y2=\"" +
           fmt("%.2f", kTop + plot_h + 6) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + tx + "\" y=\"" + fmt("%.2f", kTop + plot_h + 22) +
           "\" text-anchor=\"middle\">" + fmt("%.4g", xv) + "</text>\n";

    const double yv = yr.lo + f * (yr.hi - yr.lo);
    const std::string ty = fmt("%.2f", py(yv));
    svg += "<line x1=\"" + fmt("%.2f", kLeft - 6) + "\" y1=\"" + ty + "\" x2=\"" + x0 +
           "\" y2=\"" + ty + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", kLeft - 10) + "\" y=\"" + fmt("%.2f", py(yv) + 4) +
           "\" text-anchor=\"end\">" + fmt("%.6g", yv) + "</text>\n";
  }
  if (!spec.x_label.empty()) {
    svg += "<text x=\"" + fmt("%.2f", kLeft + plot_w / 2) + "\" y=\"" +
           fmt("%.2f", kHeight - 20) + "\" text-anchor=\"middle\">" + escape(spec.x_label) +
           "</text>\n";
  }
  if (!spec.y_label.empty()) {
    svg += "<text x=\"20\" y=\"" + fmt("%.2f", kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           fmt("%.2f", kTop + plot_h / 2) + ")\">" + escape(spec.y_label) + "</text>\n";
  }
  svg += "</g>\n";

  svg += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) svg += ' ';
    svg += fmt("%.2f", px(pts[k].first)) + "," + fmt("%.2f", py(pts[k].second));
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace secm
