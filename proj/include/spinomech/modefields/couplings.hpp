#pragma once

#include <span>

#include "spinomech/modefields/fields.hpp"
#include "spinomech/modefields/tensor.hpp"

namespace spinomech::modefields {

// Isotropic elastic and optical bulk constants used for the mode-volume
// normalizations (the strain energy density needs moduli, the wavelength
// ratios need sound velocities and the refractive index).
struct BulkMaterial {
  double youngs_modulus = 1050e9;  // Pa
  double poisson_ratio = 0.1;
  double v_p = 17500;  // m/s
  double v_s = 12000;  // m/s
  double refractive_index = 2.417;
};

struct EffectiveMass {
  double m_eff = 0;   // kg
  double x_zpf = 0;   // m
  double max_q = 0;   // normalization max|Q|, m
};

// m_eff = sum dV rho |Q|^2 / max|Q|^2;  x_zpf = sqrt(hbar / (2 m_eff Omega)).
EffectiveMass effective_mass_and_xzpf(const ModeFieldData& fields);

struct ModeVolumes {
  double v_mech = 0;  // m^3, strain-energy-density normalization
  double v_opt = 0;   // m^3, eps |e|^2 normalization
  double lambda = 0;          // free-space optical wavelength
  double lambda_p = 0;        // longitudinal acoustic wavelength v_p / f_m
  double lambda_s = 0;        // shear acoustic wavelength v_s / f_m
  double mech_over_lp3 = 0;   // V_mech / Lambda_p^3
  double mech_over_ls3 = 0;   // V_mech / Lambda_s^3
  double opt_over_lambda3 = 0;       // V_opt / lambda^3
  double opt_over_lambda_n3 = 0;     // V_opt / (lambda/n)^3
};

ModeVolumes mode_volumes(const ModeFieldData& fields, const BulkMaterial& mat);

struct GsmMap {
  std::vector<double> values;  // rad/s per volume sample
  double max_value = 0;
  Vector3 argmax_position = Vector3::Zero();
  size_t argmax_index = 0;
};

// g_sm(r) = d (eps_xx(r) - eps_yy(r)) / max|Q| * x_zpf with the color-center
// frame strain obtained from rotate_strain_to_siv.
GsmMap gsm_map(const ModeFieldData& fields, const CrystalOrientation& orient,
               double strain_susceptibility, double x_zpf);

// Photoelastic coupling
//   g_pe = -(omega_a/2) [sum dV e* . (eps0 n^4 p(alpha) S) . e]
//          / (max|Q| sum dV eps |e|^2) * x_zpf.
double coupling_gpe(const ModeFieldData& fields,
                    const CrystalOrientation& orient,
                    const PhotoelasticConstants& p, double refractive_index,
                    double x_zpf);

// Moving-boundary coupling
//   g_mb = -(omega_a/2) [sum dA (Q.n)(d_eps |e_par|^2 - d_inv_eps |d_perp|^2)]
//          / (max|Q| sum dV eps |e|^2) * x_zpf.
double coupling_gmb(const ModeFieldData& fields, double x_zpf);

// Kahan-compensated sum used for all field reductions (order-stable).
double compensated_sum(std::span<const double> values);

}  // namespace spinomech::modefields
