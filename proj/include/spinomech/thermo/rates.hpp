#pragma once

#include "spinomech/device.hpp"
#include "spinomech/qdyn/hamiltonian.hpp"

namespace spinomech::thermo {

// The linear model reads k_B*tau/(hbar*Omega), the high-temperature limit of
// Bose-Einstein; the bose model is the full occupation 1/(exp(x)-1).
enum class OccupationModel { linear, bose };

double thermal_occupation(double temperature, double omega_m,
                          OccupationModel model = OccupationModel::linear);

// Derived rate set of one node. Identities: gamma_b - gamma_b_dag = gamma_m/2
// and gamma_b_dag/gamma_b = n_th/(n_th+1).
struct RateSet {
  double gamma_a = 0;      // optical energy decay, omega_a / q_opt
  double t_a = 0;          // 1 / gamma_a
  double gamma_m = 0;      // 2 * omega_m / q_mech
  double gamma_b = 0;      // gamma_m (n_th + 1) / 2
  double gamma_b_dag = 0;  // gamma_m n_th / 2
  double n_th = 0;

  qdyn::JumpRates jump_rates() const { return {gamma_a, gamma_b, gamma_b_dag}; }
};

RateSet decay_rates(const DeviceParams& params, double n_th);

}  // namespace spinomech::thermo
