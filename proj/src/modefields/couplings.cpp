#include "spinomech/modefields/couplings.hpp"

#include <cmath>
#include <stdexcept>

#include "spinomech/constants.hpp"

namespace spinomech::modefields {

namespace {

struct KahanAccumulator {
  double sum = 0;
  double carry = 0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Linear elastic strain energy density for isotropic moduli.
double strain_energy_density(const Eigen::Matrix3d& eps,
                             const BulkMaterial& mat) {
  const double e = mat.youngs_modulus, nu = mat.poisson_ratio;
  const double lame = e * nu / ((1 + nu) * (1 - 2 * nu));
  const double mu = e / (2 * (1 + nu));
  const double tr = eps.trace();
  return 0.5 * lame * tr * tr + mu * eps.squaredNorm();
}

double optical_energy_norm(const ModeFieldData& fields) {
  KahanAccumulator acc;
  for (const auto& s : fields.volume)
    acc.add(s.weight * vacuum_permittivity * s.eps_rel *
            s.e_field.squaredNorm());
  if (!(acc.sum > 0))
    throw std::runtime_error("couplings: zero optical field norm");
  return acc.sum;
}

}  // namespace

double compensated_sum(std::span<const double> values) {
  KahanAccumulator acc;
  for (double v : values) acc.add(v);
  return acc.sum;
}

EffectiveMass effective_mass_and_xzpf(const ModeFieldData& fields) {
  if (fields.volume.empty())
    throw std::invalid_argument("effective_mass: no volume samples");
  if (!(fields.omega_m > 0))
    throw std::invalid_argument("effective_mass: mechanical frequency not set");
  EffectiveMass out;
  out.max_q = fields.max_displacement();
  if (!(out.max_q > 0))
    throw std::runtime_error("effective_mass: zero displacement field");
  KahanAccumulator acc;
  for (const auto& s : fields.volume)
    acc.add(s.weight * s.density * s.displacement.squaredNorm());
  out.m_eff = acc.sum / (out.max_q * out.max_q);
  out.x_zpf = std::sqrt(hbar / (2.0 * out.m_eff * fields.omega_m));
  return out;
}

ModeVolumes mode_volumes(const ModeFieldData& fields,
                         const BulkMaterial& mat) {
  if (fields.volume.empty())
    throw std::invalid_argument("mode_volumes: no volume samples");
  if (!(fields.omega_a > 0 && fields.omega_m > 0))
    throw std::invalid_argument("mode_volumes: frequencies not set");

  KahanAccumulator mech, opt;
  double mech_peak = 0, opt_peak = 0;
  for (const auto& s : fields.volume) {
    const double u = strain_energy_density(s.strain, mat);
    const double w = vacuum_permittivity * s.eps_rel * s.e_field.squaredNorm();
    mech.add(s.weight * u);
    opt.add(s.weight * w);
    mech_peak = std::max(mech_peak, u);
    opt_peak = std::max(opt_peak, w);
  }
  if (!(mech_peak > 0) || !(opt_peak > 0))
    throw std::runtime_error("mode_volumes: zero-energy fields");

  ModeVolumes out;
  out.v_mech = mech.sum / mech_peak;
  out.v_opt = opt.sum / opt_peak;
  const double f_m = fields.omega_m / two_pi;
  out.lambda = two_pi * speed_of_light / fields.omega_a;
  out.lambda_p = mat.v_p / f_m;
  out.lambda_s = mat.v_s / f_m;
  out.mech_over_lp3 = out.v_mech / std::pow(out.lambda_p, 3);
  out.mech_over_ls3 = out.v_mech / std::pow(out.lambda_s, 3);
  out.opt_over_lambda3 = out.v_opt / std::pow(out.lambda, 3);
  out.opt_over_lambda_n3 =
      out.v_opt / std::pow(out.lambda / mat.refractive_index, 3);
  return out;
}

GsmMap gsm_map(const ModeFieldData& fields, const CrystalOrientation& orient,
               double strain_susceptibility, double x_zpf) {
  if (fields.volume.empty())
    throw std::invalid_argument("gsm_map: no volume samples");
  const double max_q = fields.max_displacement();
  if (!(max_q > 0))
    throw std::runtime_error("gsm_map: zero displacement normalization");

  GsmMap out;
  out.values.reserve(fields.volume.size());
  for (size_t i = 0; i < fields.volume.size(); ++i) {
    const Matrix3 siv = rotate_strain_to_siv(fields.volume[i].strain, orient);
    const double combo = siv(0, 0) - siv(1, 1);
    const double g = strain_susceptibility * combo / max_q * x_zpf;
    out.values.push_back(g);
    if (std::abs(g) > std::abs(out.max_value)) {
      out.max_value = g;
      out.argmax_position = fields.volume[i].position;
      out.argmax_index = i;
    }
  }
  return out;
}

double coupling_gpe(const ModeFieldData& fields,
                    const CrystalOrientation& orient,
                    const PhotoelasticConstants& p, double refractive_index,
                    double x_zpf) {
  if (fields.volume.empty())
    throw std::invalid_argument("coupling_gpe: no volume samples");
  const double max_q = fields.max_displacement();
  if (!(max_q > 0))
    throw std::runtime_error("coupling_gpe: zero displacement normalization");

  const Rank4 pt = rotate_photoelastic(p, orient.alpha);
  const double n4 = std::pow(refractive_index, 4);

  KahanAccumulator num;
  for (const auto& s : fields.volume) {
    // delta_eps_ij = eps0 n^4 p_ijkl S_kl, contracted with e* and e
    Eigen::Matrix3d deps = Eigen::Matrix3d::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double acc = 0;
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) acc += pt(i, j, k, l) * s.strain(k, l);
        deps(i, j) = vacuum_permittivity * n4 * acc;
      }
    const Complex quad = s.e_field.dot(deps.cast<Complex>() * s.e_field);
    num.add(s.weight * quad.real());
  }
  const double denom = max_q * optical_energy_norm(fields);
  return -0.5 * fields.omega_a * num.sum / denom * x_zpf;
}

double coupling_gmb(const ModeFieldData& fields, double x_zpf) {
  if (fields.surface.empty())
    throw std::invalid_argument("coupling_gmb: no surface samples");
  const double max_q = fields.max_displacement();
  if (!(max_q > 0))
    throw std::runtime_error("coupling_gmb: zero displacement normalization");

  KahanAccumulator num;
  for (const auto& s : fields.surface) {
    const double qn = (s.displacement.dot(s.normal.cast<Complex>())).real();
    const double term =
        vacuum_permittivity * s.delta_eps * s.e_parallel.squaredNorm() -
        s.delta_inv_eps / vacuum_permittivity * s.d_perp.squaredNorm();
    num.add(s.weight * qn * term);
  }
  const double denom = max_q * optical_energy_norm(fields);
  return -0.5 * fields.omega_a * num.sum / denom * x_zpf;
}

}  // namespace spinomech::modefields
