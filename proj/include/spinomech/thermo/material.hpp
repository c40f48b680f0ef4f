#pragma once

#include <string>
#include <vector>

namespace spinomech::thermo {

// Piecewise-linear interpolation in log-log space; diamond thermal
// conductivity spans decades, linear interpolation would distort the peak.
// Queries outside the tabulated range are an error.
class LogLogTable {
 public:
  LogLogTable() = default;
  LogLogTable(std::vector<double> temperatures, std::vector<double> values);

  double operator()(double temperature) const;
  double min_temperature() const { return t_.front(); }
  double max_temperature() const { return t_.back(); }
  bool empty() const { return t_.empty(); }

 private:
  std::vector<double> t_, v_;       // raw knots
  std::vector<double> logt_, logv_;
};

struct MaterialProperties {
  double density = 0;                // kg/m^3
  double acoustic_velocity = 0;      // m/s, velocity entering the loss models
  double grueneisen = 0;
  double longitudinal_velocity = 0;  // m/s
  double shear_velocity = 0;         // m/s
  double refractive_index = 0;
  LogLogTable kappa;                 // thermal conductivity W/(m K) vs T
  LogLogTable cv;                    // volumetric heat capacity J/(m^3 K) vs T

  void validate() const;
};

// File format: `key = value` header lines (rho, c, gamma_G, v_p, v_s, n),
// then sections [kappa] and [cv], each a list of CSV rows `T_kelvin,value`
// with strictly increasing temperature. `#` starts a comment.
MaterialProperties load_material_table(const std::string& path);

}  // namespace spinomech::thermo
