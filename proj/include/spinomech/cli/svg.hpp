#pragma once

#include <string>
#include <vector>

namespace spinomech::cli {

// Minimal deterministic line-chart emitter; CSV remains the data contract,
// the SVG is a convenience view.
struct LineSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<LineSeries> series;
};

void write_svg_chart(const std::string& path, const LineChart& chart);

}  // namespace spinomech::cli
