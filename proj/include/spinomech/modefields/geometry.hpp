#pragma once

#include <string>
#include <vector>

namespace spinomech::modefields {

// Concentrator taper and unit-cell schedule of the nanobeam. Lengths in
// meters.
struct TaperParams {
  double bridge_width = 0;        // b
  double defect_period = 0;       // a_d
  double defect_height = 0;       // h_y_d
  double defect_ellipse_x = 0;    // h_x_d
  double mirror_period = 0;       // a
  double mirror_ellipse_x = 0;    // h_x
  double mirror_ellipse_y = 0;    // h_y
  int n_cells = 0;                // tapered cells per side (defect -> mirror)
  int samples_per_side = 64;      // y-grid resolution of the hyperbola
};

struct TaperGeometry {
  // Hyperbola x(y) = (c1/c2) sqrt(c2^2 + y^2), c1 = b/2,
  // c2 = b h_y_d / (2 a_d); right branch followed by the mirrored left one.
  std::vector<std::pair<double, double>> polyline;
  // Quadratic schedule param(n) = defect + (mirror - defect) (n/N)^2 for
  // period and ellipse axes, n = 0..N from the center outward.
  struct CellRow {
    int n;
    double period;
    double ellipse_x;
    double ellipse_y;
  };
  std::vector<CellRow> schedule;
};

double taper_halfwidth(double y, double bridge_width, double defect_height,
                       double defect_period);

TaperGeometry taper_geometry(const TaperParams& params);

void write_polyline_csv(const std::string& path, const TaperGeometry& geom);
void write_schedule_csv(const std::string& path, const TaperGeometry& geom);

TaperGeometry load_geometry_csv(const std::string& polyline_path,
                                const std::string& schedule_path);

}  // namespace spinomech::modefields
