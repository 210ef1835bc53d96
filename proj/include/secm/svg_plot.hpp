#pragma once

#include <string>
#include <vector>

namespace secm {

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Self-contained SVG (800x600 viewBox) with both axes, 10 labelled ticks per
/// axis and the points joined by one polyline. Points with a non-finite
/// coordinate are dropped. Throws InputError when fewer than two points remain
/// or the coordinate vectors differ in length.
std::string render_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                       const PlotSpec& spec);

}  // namespace secm
