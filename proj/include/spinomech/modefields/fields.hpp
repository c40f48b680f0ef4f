#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace spinomech::modefields {

using Complex = std::complex<double>;
using Vector3c = Eigen::Vector3cd;
using Vector3 = Eigen::Vector3d;

// One volume quadrature sample of an eigenmode export. Fields carry the
// exporter's (unnormalized) eigenmode scale; couplings normalize by the
// global displacement maximum.
struct VolumeSample {
  Vector3 position;       // m
  double weight = 0;      // element volume dV, m^3
  Vector3c displacement;  // Q, m
  Eigen::Matrix3d strain; // symmetric, dimensionless
  Vector3c e_field;       // V/m
  double eps_rel = 1;     // relative permittivity
  double density = 0;     // kg/m^3
};

struct SurfaceSample {
  Vector3 position;       // m
  double weight = 0;      // element area dA, m^2
  Vector3 normal;         // outward unit normal
  Vector3c displacement;  // Q on the boundary, m
  Vector3c e_parallel;    // tangential E, V/m
  Vector3c d_perp;        // normal D, C/m^2
  double delta_eps = 0;     // jump of the relative permittivity
  double delta_inv_eps = 0; // jump of its inverse
};

struct ModeFieldData {
  std::vector<VolumeSample> volume;
  std::vector<SurfaceSample> surface;
  double omega_a = 0;  // optical mode frequency, rad/s
  double omega_m = 0;  // mechanical mode frequency, rad/s

  void validate() const;
  double max_displacement() const;  // max |Q| over all samples
};

// Columnar text export, `#` comments, header lines `# key = value` for
// omega_a_hz and omega_m_hz, and a `# columns:` line declaring the order.
// Volume columns:
//   x,y,z,dV,Qx_re,Qx_im,Qy_re,Qy_im,Qz_re,Qz_im,
//   e11,e22,e33,e12,e13,e23,Ex_re,Ex_im,Ey_re,Ey_im,Ez_re,Ez_im,eps_rel,rho
// Surface columns:
//   x,y,z,dA,nx,ny,nz,Qx_re,...,Qz_im,Epx_re,...,Epz_im,Dpx_re,...,Dpz_im,
//   delta_eps,delta_inv_eps
ModeFieldData load_field_export(const std::string& volume_path,
                                const std::optional<std::string>& surface_path =
                                    std::nullopt);

void write_volume_export(const std::string& path, const ModeFieldData& data);
void write_surface_export(const std::string& path, const ModeFieldData& data);

}  // namespace spinomech::modefields
