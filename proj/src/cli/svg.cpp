#include "spinomech/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace spinomech::cli {

namespace {

constexpr double width = 860, height = 560;
constexpr double ml = 90, mr = 190, mt = 50, mb = 70;  // margins

const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                         "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct AxisTicks {
  std::vector<double> values;  // data coordinates
};

AxisTicks make_ticks(double lo, double hi, bool log_scale) {
  AxisTicks t;
  if (log_scale) {
    const int e0 = int(std::floor(std::log10(lo)));
    const int e1 = int(std::ceil(std::log10(hi)));
    for (int e = e0; e <= e1; ++e) t.values.push_back(std::pow(10.0, e));
  } else {
    const double span = hi - lo;
    const double raw = span / 6;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
      if (mag * m >= raw) {
        step = mag * m;
        break;
      }
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-12 * span;
         v += step)
      t.values.push_back(v);
  }
  return t;
}

}  // namespace

void write_svg_chart(const std::string& path, const LineChart& chart) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : chart.series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      const double x = s.x[i], y = s.y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (chart.log_x && x <= 0) continue;
      if (chart.log_y && y <= 0) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(xmin < xmax)) xmax = xmin + 1;
  if (!(ymin < ymax)) {
    ymin = ymin > 0 || !chart.log_y ? ymin * 0.5 - 0.5 : 1e-3;
    ymax = ymin + 1;
  }

  auto tx = [&](double x) {
    const double a = chart.log_x ? std::log10(x) : x;
    const double lo = chart.log_x ? std::log10(xmin) : xmin;
    const double hi = chart.log_x ? std::log10(xmax) : xmax;
    return ml + (a - lo) / (hi - lo) * (width - ml - mr);
  };
  auto ty = [&](double y) {
    const double a = chart.log_y ? std::log10(y) : y;
    const double lo = chart.log_y ? std::log10(ymin) : ymin;
    const double hi = chart.log_y ? std::log10(ymax) : ymax;
    return height - mb - (a - lo) / (hi - lo) * (height - mt - mb);
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << chart.title
      << "</text>\n";

  // frame
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\""
      << width - ml - mr << "\" height=\"" << height - mt - mb
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double v : make_ticks(xmin, xmax, chart.log_x).values) {
    if (v < xmin || v > xmax) continue;
    const double x = tx(v);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << height - mb << "\" x2=\""
        << fmt(x) << "\" y2=\"" << height - mb + 6 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << height - mb + 22
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt(v) << "</text>\n";
  }
  for (double v : make_ticks(ymin, ymax, chart.log_y).values) {
    if (v < ymin || v > ymax) continue;
    const double y = ty(v);
    out << "<line x1=\"" << ml - 6 << "\" y1=\"" << fmt(y) << "\" x2=\"" << ml
        << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml - 10 << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt(v) << "</text>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 18
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << chart.x_label << "</text>\n";
  out << "<text x=\"24\" y=\"" << height / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 24 "
      << height / 2 << ")\">" << chart.y_label << "</text>\n";

  for (size_t si = 0; si < chart.series.size(); ++si) {
    const auto& s = chart.series[si];
    const char* color = palette[si % (sizeof palette / sizeof *palette)];
    std::string points;
    for (size_t i = 0; i < s.x.size(); ++i) {
      const double x = s.x[i], y = s.y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if ((chart.log_x && x <= 0) || (chart.log_y && y <= 0)) continue;
      points += fmt(tx(x)) + "," + fmt(ty(y)) + " ";
    }
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.6\" points=\"" << points << "\"/>\n";
    const double ly = mt + 16 + 18 * double(si);
    out << "<line x1=\"" << width - mr + 12 << "\" y1=\"" << fmt(ly - 4)
        << "\" x2=\"" << width - mr + 36 << "\" y2=\"" << fmt(ly - 4)
        << "\" stroke=\"" << color << "\" stroke-width=\"1.6\"/>\n";
    out << "<text x=\"" << width - mr + 42 << "\" y=\"" << fmt(ly)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.name
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace spinomech::cli
