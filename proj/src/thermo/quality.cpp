#include "spinomech/thermo/quality.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace spinomech::thermo {

using std::numbers::pi;

double akhiezer_q(double omega_m, double temperature,
                  const MaterialProperties& mat) {
  mat.validate();
  if (omega_m <= 0) throw std::invalid_argument("akhiezer_q: omega_m <= 0");
  if (temperature <= 0)
    throw std::invalid_argument("akhiezer_q: temperature <= 0");
  const double c = mat.acoustic_velocity;
  const double num = mat.density * c * c * c * c;
  const double den = 2.0 * pi * mat.grueneisen * mat.grueneisen *
                     mat.kappa(temperature) * omega_m * temperature;
  return num / den;
}

double landau_rumer_q(double temperature, const MaterialProperties& mat) {
  mat.validate();
  if (temperature <= 0)
    throw std::invalid_argument("landau_rumer_q: temperature <= 0");
  const double c = mat.acoustic_velocity;
  const double num = 2.0 * mat.density * c * c;
  const double den = pi * mat.grueneisen * mat.grueneisen *
                     mat.cv(temperature) * temperature;
  return num / den;
}

const char* loss_channel_name(LossChannel c) {
  switch (c) {
    case LossChannel::clamping: return "clamping";
    case LossChannel::akhiezer: return "akhiezer";
    case LossChannel::landau_rumer: return "landau-rumer";
  }
  return "?";
}

CombinedQ combined_q(double omega_m, double temperature,
                     const MaterialProperties& mat, double q_clamp) {
  if (!(q_clamp > 0)) throw std::invalid_argument("combined_q: q_clamp <= 0");
  CombinedQ out;
  out.q_clamp = q_clamp;
  out.q_akhiezer = akhiezer_q(omega_m, temperature, mat);
  out.q_landau_rumer = landau_rumer_q(temperature, mat);
  out.q_total = 1.0 / (1.0 / out.q_clamp + 1.0 / out.q_akhiezer +
                       1.0 / out.q_landau_rumer);
  out.dominant = LossChannel::clamping;
  double smallest = out.q_clamp;
  if (out.q_akhiezer < smallest) {
    smallest = out.q_akhiezer;
    out.dominant = LossChannel::akhiezer;
  }
  if (out.q_landau_rumer < smallest) out.dominant = LossChannel::landau_rumer;
  return out;
}

ParasiticLoss parasitic_kappa(double g_sm_i, double delta_i, double omega_m) {
  if (g_sm_i == 0 && delta_i == 0)
    throw std::invalid_argument("parasitic_kappa: g and delta both zero");
  const double g2 = g_sm_i * g_sm_i;
  const double frac = g2 / (g2 + delta_i * delta_i);
  ParasiticLoss out;
  out.kappa_i = std::abs(g_sm_i) * frac * frac;
  out.q_effective = out.kappa_i > 0
                        ? omega_m / out.kappa_i
                        : std::numeric_limits<double>::infinity();
  return out;
}

double bath_mode_occupation(double kappa_i, double kappa_e, double n_hot,
                            double n_cold) {
  if (!(kappa_i >= 0) || !(kappa_e >= 0) || kappa_i + kappa_e <= 0)
    throw std::invalid_argument("bath_mode_occupation: bad coupling rates");
  return (kappa_i * n_hot + kappa_e * n_cold) / (kappa_i + kappa_e);
}

}  // namespace spinomech::thermo
