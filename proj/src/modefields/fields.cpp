#include "spinomech/modefields/fields.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spinomech/constants.hpp"

namespace spinomech::modefields {

namespace {

constexpr const char* volume_columns =
    "x,y,z,dV,Qx_re,Qx_im,Qy_re,Qy_im,Qz_re,Qz_im,"
    "e11,e22,e33,e12,e13,e23,"
    "Ex_re,Ex_im,Ey_re,Ey_im,Ez_re,Ez_im,eps_rel,rho";
constexpr int volume_column_count = 24;

constexpr const char* surface_columns =
    "x,y,z,dA,nx,ny,nz,Qx_re,Qx_im,Qy_re,Qy_im,Qz_re,Qz_im,"
    "Epx_re,Epx_im,Epy_re,Epy_im,Epz_re,Epz_im,"
    "Dpx_re,Dpx_im,Dpy_re,Dpy_im,Dpz_re,Dpz_im,delta_eps,delta_inv_eps";
constexpr int surface_column_count = 27;

struct ParsedFile {
  double omega_a = 0;
  double omega_m = 0;
  std::vector<std::vector<double>> rows;
};

ParsedFile parse_columnar(const std::string& path, const char* expected_columns,
                          int expected_count) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open field export: " + path);
  ParsedFile out;
  bool columns_seen = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               what);
    };
    if (line.empty() || line[0] == '#') {
      // header keys and the column declaration
      std::istringstream hs(line);
      std::string hash, key, eq;
      hs >> hash >> key;
      if (key == "columns:") {
        std::string cols;
        hs >> cols;
        if (cols != expected_columns) fail("unexpected column order");
        columns_seen = true;
      } else if (key == "omega_a_hz" || key == "omega_m_hz") {
        double value;
        if (!(hs >> eq >> value) || eq != "=") fail("bad header line");
        (key == "omega_a_hz" ? out.omega_a : out.omega_m) =
            two_pi * value;
      }
      continue;
    }
    std::vector<double> row;
    row.reserve(size_t(expected_count));
    std::istringstream rs(line);
    double v;
    while (rs >> v) {
      row.push_back(v);
      rs.ignore(1, ',');
    }
    if (int(row.size()) != expected_count)
      fail("expected " + std::to_string(expected_count) + " columns, got " +
           std::to_string(row.size()));
    out.rows.push_back(std::move(row));
  }
  if (!columns_seen)
    throw std::runtime_error(path + ": missing `# columns:` declaration");
  return out;
}

Vector3c complex_triplet(const std::vector<double>& r, size_t at) {
  return {Complex(r[at], r[at + 1]), Complex(r[at + 2], r[at + 3]),
          Complex(r[at + 4], r[at + 5])};
}

void append_complex_triplet(std::string& line, const Vector3c& v) {
  char buf[64];
  for (int i = 0; i < 3; ++i) {
    std::snprintf(buf, sizeof buf, ",%.9e,%.9e", v(i).real(), v(i).imag());
    line += buf;
  }
}

}  // namespace

void ModeFieldData::validate() const {
  for (size_t i = 0; i < volume.size(); ++i) {
    const auto& s = volume[i];
    if (!(s.weight > 0))
      throw std::runtime_error("volume sample " + std::to_string(i) +
                               ": non-positive weight");
    if ((s.strain - s.strain.transpose()).cwiseAbs().maxCoeff() >
        1e-9 * std::max(1e-300, s.strain.cwiseAbs().maxCoeff()))
      throw std::runtime_error("volume sample " + std::to_string(i) +
                               ": strain not symmetric");
    if (!(s.eps_rel > 0) || !(s.density >= 0))
      throw std::runtime_error("volume sample " + std::to_string(i) +
                               ": bad material data");
  }
  for (size_t i = 0; i < surface.size(); ++i) {
    const auto& s = surface[i];
    if (!(s.weight > 0))
      throw std::runtime_error("surface sample " + std::to_string(i) +
                               ": non-positive weight");
    if (std::abs(s.normal.norm() - 1.0) > 1e-6)
      throw std::runtime_error("surface sample " + std::to_string(i) +
                               ": normal is not unit length");
  }
}

double ModeFieldData::max_displacement() const {
  double m = 0;
  for (const auto& s : volume) m = std::max(m, s.displacement.norm());
  for (const auto& s : surface) m = std::max(m, s.displacement.norm());
  return m;
}

ModeFieldData load_field_export(
    const std::string& volume_path,
    const std::optional<std::string>& surface_path) {
  ModeFieldData data;
  ParsedFile vf =
      parse_columnar(volume_path, volume_columns, volume_column_count);
  data.omega_a = vf.omega_a;
  data.omega_m = vf.omega_m;
  data.volume.reserve(vf.rows.size());
  for (const auto& r : vf.rows) {
    VolumeSample s;
    s.position = {r[0], r[1], r[2]};
    s.weight = r[3];
    s.displacement = complex_triplet(r, 4);
    s.strain << r[10], r[13], r[14],
                r[13], r[11], r[15],
                r[14], r[15], r[12];
    s.e_field = complex_triplet(r, 16);
    s.eps_rel = r[22];
    s.density = r[23];
    data.volume.push_back(std::move(s));
  }
  if (surface_path) {
    ParsedFile sf =
        parse_columnar(*surface_path, surface_columns, surface_column_count);
    data.surface.reserve(sf.rows.size());
    for (const auto& r : sf.rows) {
      SurfaceSample s;
      s.position = {r[0], r[1], r[2]};
      s.weight = r[3];
      s.normal = {r[4], r[5], r[6]};
      s.displacement = complex_triplet(r, 7);
      s.e_parallel = complex_triplet(r, 13);
      s.d_perp = complex_triplet(r, 19);
      s.delta_eps = r[25];
      s.delta_inv_eps = r[26];
      data.surface.push_back(std::move(s));
    }
  }
  data.validate();
  return data;
}

void write_volume_export(const std::string& path, const ModeFieldData& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[128];
  out << "# spinomech mode field export\n";
  std::snprintf(buf, sizeof buf, "# omega_a_hz = %.9e\n",
                data.omega_a / (two_pi));
  out << buf;
  std::snprintf(buf, sizeof buf, "# omega_m_hz = %.9e\n",
                data.omega_m / (two_pi));
  out << buf;
  out << "# columns: " << volume_columns << "\n";
  for (const auto& s : data.volume) {
    std::string line;
    std::snprintf(buf, sizeof buf, "%.9e,%.9e,%.9e,%.9e", s.position(0),
                  s.position(1), s.position(2), s.weight);
    line += buf;
    append_complex_triplet(line, s.displacement);
    std::snprintf(buf, sizeof buf, ",%.9e,%.9e,%.9e,%.9e,%.9e,%.9e",
                  s.strain(0, 0), s.strain(1, 1), s.strain(2, 2),
                  s.strain(0, 1), s.strain(0, 2), s.strain(1, 2));
    line += buf;
    append_complex_triplet(line, s.e_field);
    std::snprintf(buf, sizeof buf, ",%.9e,%.9e", s.eps_rel, s.density);
    line += buf;
    out << line << "\n";
  }
}

void write_surface_export(const std::string& path, const ModeFieldData& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[128];
  out << "# spinomech mode field export (surface)\n";
  out << "# columns: " << surface_columns << "\n";
  for (const auto& s : data.surface) {
    std::string line;
    std::snprintf(buf, sizeof buf, "%.9e,%.9e,%.9e,%.9e,%.9e,%.9e,%.9e",
                  s.position(0), s.position(1), s.position(2), s.weight,
                  s.normal(0), s.normal(1), s.normal(2));
    line += buf;
    append_complex_triplet(line, s.displacement);
    append_complex_triplet(line, s.e_parallel);
    append_complex_triplet(line, s.d_perp);
    std::snprintf(buf, sizeof buf, ",%.9e,%.9e", s.delta_eps, s.delta_inv_eps);
    line += buf;
    out << line << "\n";
  }
}

}  // namespace spinomech::modefields
