#pragma once

#include "spinomech/thermo/material.hpp"

namespace spinomech::thermo {

// Akhiezer-limited quality factor Q_A = rho c^4 / (2 pi gamma^2 kappa(tau) Omega tau),
// with c the material acoustic velocity and tau the bath temperature.
double akhiezer_q(double omega_m, double temperature,
                  const MaterialProperties& mat);

// Landau-Rumer quality factor Q_LR = 2 rho c^2 / (pi gamma^2 C_v(tau) tau).
double landau_rumer_q(double temperature, const MaterialProperties& mat);

enum class LossChannel { clamping, akhiezer, landau_rumer };

const char* loss_channel_name(LossChannel c);

struct CombinedQ {
  double q_total = 0;
  LossChannel dominant = LossChannel::clamping;
  double q_clamp = 0;
  double q_akhiezer = 0;
  double q_landau_rumer = 0;
};

// Harmonic combination 1/Q_total = 1/Q_clamp + 1/Q_A + 1/Q_LR; the dominant
// channel is the smallest constituent.
CombinedQ combined_q(double omega_m, double temperature,
                     const MaterialProperties& mat, double q_clamp);

struct ParasiticLoss {
  double kappa_i = 0;     // rad/s
  double q_effective = 0; // omega_m / kappa_i
};

// Loss into a spectator mechanical mode i with coupling g_i and detuning
// Delta_i: kappa_i = g_i (g_i^2/(g_i^2+Delta_i^2))^2.
ParasiticLoss parasitic_kappa(double g_sm_i, double delta_i, double omega_m);

// Engineered-bath occupancy (kappa_i n_hot + kappa_e n_cold)/(kappa_i+kappa_e).
double bath_mode_occupation(double kappa_i, double kappa_e, double n_hot,
                            double n_cold);

}  // namespace spinomech::thermo
