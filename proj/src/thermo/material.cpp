#include "spinomech/thermo/material.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spinomech::thermo {

LogLogTable::LogLogTable(std::vector<double> temperatures,
                         std::vector<double> values)
    : t_(std::move(temperatures)), v_(std::move(values)) {
  if (t_.size() != v_.size() || t_.size() < 2)
    throw std::invalid_argument("LogLogTable: need >= 2 matching points");
  for (size_t i = 0; i < t_.size(); ++i) {
    if (!(t_[i] > 0) || !(v_[i] > 0))
      throw std::invalid_argument("LogLogTable: points must be positive");
    if (i > 0 && t_[i] <= t_[i - 1])
      throw std::invalid_argument(
          "LogLogTable: temperatures must be strictly increasing");
  }
  logt_.resize(t_.size());
  logv_.resize(v_.size());
  std::transform(t_.begin(), t_.end(), logt_.begin(),
                 [](double x) { return std::log(x); });
  std::transform(v_.begin(), v_.end(), logv_.begin(),
                 [](double x) { return std::log(x); });
}

double LogLogTable::operator()(double temperature) const {
  if (empty()) throw std::logic_error("LogLogTable: empty table");
  if (temperature < t_.front() || temperature > t_.back())
    throw std::out_of_range("LogLogTable: temperature outside table range");
  const auto it = std::upper_bound(t_.begin(), t_.end(), temperature);
  if (it == t_.end()) return v_.back();
  const size_t hi = size_t(it - t_.begin());
  if (hi == 0) return v_.front();
  const size_t lo = hi - 1;
  const double x = std::log(temperature);
  const double f = (x - logt_[lo]) / (logt_[hi] - logt_[lo]);
  return std::exp(logv_[lo] + f * (logv_[hi] - logv_[lo]));
}

void MaterialProperties::validate() const {
  if (!(density > 0 && acoustic_velocity > 0 && grueneisen > 0 &&
        longitudinal_velocity > 0 && shear_velocity > 0 &&
        refractive_index > 0))
    throw std::invalid_argument(
        "MaterialProperties: scalar constants must be > 0");
  if (kappa.empty() || cv.empty())
    throw std::invalid_argument("MaterialProperties: missing tables");
}

MaterialProperties load_material_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open material file: " + path);

  MaterialProperties mat;
  std::map<std::string, double> header;
  std::vector<double> kt, kv, ct, cvv;
  std::string section;
  std::string line;
  int lineno = 0;

  auto fail = [&](const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section != "kappa" && section != "cv")
        fail("unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail("expected `key = value`");
      std::string key = line.substr(0, eq);
      key.erase(key.find_last_not_of(" \t") + 1);
      try {
        header[key] = std::stod(line.substr(eq + 1));
      } catch (const std::exception&) {
        fail("bad numeric value for key `" + key + "`");
      }
    } else {
      std::istringstream row(line);
      double t, v;
      char comma;
      if (!(row >> t >> comma >> v) || comma != ',') fail("malformed CSV row");
      (section == "kappa" ? kt : ct).push_back(t);
      (section == "kappa" ? kv : cvv).push_back(v);
    }
  }

  auto take = [&](const char* key) {
    const auto it = header.find(key);
    if (it == header.end())
      throw std::runtime_error(path + ": missing header key `" +
                               std::string(key) + "`");
    return it->second;
  };
  mat.density = take("rho");
  mat.acoustic_velocity = take("c");
  mat.grueneisen = take("gamma_G");
  mat.longitudinal_velocity = take("v_p");
  mat.shear_velocity = take("v_s");
  mat.refractive_index = take("n");
  mat.kappa = LogLogTable(kt, kv);
  mat.cv = LogLogTable(ct, cvv);
  mat.validate();
  return mat;
}

}  // namespace spinomech::thermo
