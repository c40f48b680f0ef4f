#include "spinomech/modefields/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinomech::modefields {

double taper_halfwidth(double y, double bridge_width, double defect_height,
                       double defect_period) {
  const double c1 = bridge_width / 2.0;
  const double c2 = bridge_width * defect_height / (2.0 * defect_period);
  return c1 / c2 * std::sqrt(c2 * c2 + y * y);
}

TaperGeometry taper_geometry(const TaperParams& p) {
  if (!(p.bridge_width > 0 && p.defect_period > 0 && p.defect_height > 0))
    throw std::invalid_argument("taper_geometry: lengths must be > 0");
  if (p.n_cells < 0 || p.samples_per_side < 1)
    throw std::invalid_argument("taper_geometry: bad counts");

  TaperGeometry out;
  // right branch top-to-bottom, then left branch bottom-to-top
  for (int k = -p.samples_per_side; k <= p.samples_per_side; ++k) {
    const double y = p.defect_height * double(k) / p.samples_per_side;
    out.polyline.push_back(
        {taper_halfwidth(y, p.bridge_width, p.defect_height, p.defect_period),
         y});
  }
  for (int k = p.samples_per_side; k >= -p.samples_per_side; --k) {
    const double y = p.defect_height * double(k) / p.samples_per_side;
    out.polyline.push_back(
        {-taper_halfwidth(y, p.bridge_width, p.defect_height, p.defect_period),
         y});
  }

  const int n = p.n_cells;
  for (int k = 0; k <= n; ++k) {
    if (k == n && n > 0) {
      // endpoint exact
      out.schedule.push_back(
          {k, p.mirror_period, p.mirror_ellipse_x, p.mirror_ellipse_y});
      continue;
    }
    const double f = n > 0 ? double(k) * k / (double(n) * n) : 0.0;
    out.schedule.push_back(
        {k, p.defect_period + (p.mirror_period - p.defect_period) * f,
         p.defect_ellipse_x + (p.mirror_ellipse_x - p.defect_ellipse_x) * f,
         p.defect_height + (p.mirror_ellipse_y - p.defect_height) * f});
  }
  return out;
}

void write_polyline_csv(const std::string& path, const TaperGeometry& geom) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "x,y\n";
  char buf[80];
  for (const auto& [x, y] : geom.polyline) {
    std::snprintf(buf, sizeof buf, "%.12e,%.12e\n", x, y);
    out << buf;
  }
}

void write_schedule_csv(const std::string& path, const TaperGeometry& geom) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "n,a,hx,hy\n";
  char buf[96];
  for (const auto& row : geom.schedule) {
    std::snprintf(buf, sizeof buf, "%d,%.12e,%.12e,%.12e\n", row.n, row.period,
                  row.ellipse_x, row.ellipse_y);
    out << buf;
  }
}

TaperGeometry load_geometry_csv(const std::string& polyline_path,
                                const std::string& schedule_path) {
  TaperGeometry out;
  std::ifstream pin(polyline_path);
  if (!pin) throw std::runtime_error("cannot open " + polyline_path);
  std::string line;
  std::getline(pin, line);
  if (line != "x,y") throw std::runtime_error(polyline_path + ": bad header");
  while (std::getline(pin, line)) {
    double x, y;
    char comma;
    std::istringstream row(line);
    if (!(row >> x >> comma >> y))
      throw std::runtime_error(polyline_path + ": malformed row");
    out.polyline.push_back({x, y});
  }
  std::ifstream sin(schedule_path);
  if (!sin) throw std::runtime_error("cannot open " + schedule_path);
  std::getline(sin, line);
  if (line != "n,a,hx,hy")
    throw std::runtime_error(schedule_path + ": bad header");
  while (std::getline(sin, line)) {
    TaperGeometry::CellRow r;
    char c1, c2, c3;
    std::istringstream row(line);
    if (!(row >> r.n >> c1 >> r.period >> c2 >> r.ellipse_x >> c3 >>
          r.ellipse_y))
      throw std::runtime_error(schedule_path + ": malformed row");
    out.schedule.push_back(r);
  }
  return out;
}

}  // namespace spinomech::modefields
