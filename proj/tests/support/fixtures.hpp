#pragma once

#include "spinomech/modefields/fields.hpp"

namespace spinomech::testsupport {

// Synthetic Gaussian eigenmode on an odd n^3-ish grid spanning +-5 sigma:
//   |Q|^2, strain energy density and eps|e|^2 are all Gaussians of standard
//   deviation sigma, so every mode volume equals (2 pi)^{3/2} sigma^3 and
//   m_eff = rho (2 pi)^{3/2} sigma^3 analytically.
// Strain is uniaxial eps_33 = s0 * exp(-r^2/(4 sigma^2)), which keeps the
// color-center combination hand-computable: eps'_xx - eps'_yy = -2/3 eps_33
// for the default center axes, independent of the in-plane angle.
struct GaussianFixtureParams {
  int nx = 21, ny = 21, nz = 23;
  double sigma = 1e-7;       // m
  double q0 = 1e-9;          // peak |Q|, m
  double s0 = 1e-2;          // peak strain
  double e0 = 1e6;           // peak |E|, V/m
  double eps_rel = 5.84;     // n^2 for n = 2.417
  double density = 3515;     // kg/m^3
  double omega_a_hz = 197.5e12;
  double omega_m_hz = 5.34e9;
  int n_surface = 400;       // samples on the z = +3 sigma face
};

modefields::ModeFieldData gaussian_fixture(const GaussianFixtureParams& p = {});

// Degenerate uniform fixture for the photoelastic coupling: e along x,
// S_11 = s everywhere, unit relative permittivity and uniform displacement
// q0 along z, so
//   g_pe = -(omega_a/2) n^4 p'_1111(alpha) s / q0 * x_zpf.
modefields::ModeFieldData plane_wave_fixture(double strain_s, double q0,
                                             int n_samples = 32);

// Single flat facet for the moving-boundary coupling on top of a uniform
// optical volume: one surface sample with Q.n = q0,
//   g_mb = -(omega_a/2) dA (eps0 d_eps |Ep|^2 - d_inv_eps/eps0 |Dp|^2)
//          / (q0 * V eps0 eps_r E0^2) * x_zpf.
struct FacetFixtureParams {
  double area = 1e-14;        // m^2
  double q0 = 1e-9;           // m
  double e_par = 2e5;         // V/m
  double d_perp = 3e-6;       // C/m^2
  double delta_eps = 4.84;
  double delta_inv_eps = -0.82;
  double volume = 1e-20;      // m^3 of the uniform optical region
  double e0 = 1e6;            // V/m
  double eps_rel = 5.84;
  int n_volume = 8;
};

modefields::ModeFieldData facet_fixture(const FacetFixtureParams& p = {});

// FNV-1a over a fixed-format serialization of all parsed values.
std::uint64_t field_data_checksum(const modefields::ModeFieldData& data);

}  // namespace spinomech::testsupport
