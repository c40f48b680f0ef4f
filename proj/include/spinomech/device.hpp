#pragma once

#include <cmath>
#include <stdexcept>

namespace spinomech {

// Scalar physical parameters of one node. All frequencies, couplings and
// detunings are angular (rad/s); conversion from linear Hz happens once at
// the configuration boundary.
struct DeviceParams {
  double omega_a = 0;      // optical cavity frequency
  double omega_m = 0;      // mechanical mode frequency
  double omega_sigma = 0;  // spin transition frequency
  double delta_pump = 0;   // pump detuning from the cavity
  double g_om = 0;         // vacuum optomechanical coupling
  double pump_alpha = 0;   // dimensionless intracavity pump amplitude
  double g_sm = 0;         // spin-mechanical coupling
  double q_opt = 0;        // optical quality factor
  double q_mech = 0;       // mechanical quality factor
  double temperature = 0;  // bath temperature, K
  double pulse_t = 0;      // pump pulse duration, s

  void validate() const {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!(finite(omega_a) && finite(omega_m) && finite(omega_sigma) &&
          finite(delta_pump) && finite(g_om) && finite(pump_alpha) &&
          finite(g_sm) && finite(q_opt) && finite(q_mech) &&
          finite(temperature) && finite(pulse_t)))
      throw std::invalid_argument("DeviceParams: non-finite parameter");
    if (omega_a <= 0 || omega_m <= 0 || omega_sigma <= 0)
      throw std::invalid_argument("DeviceParams: frequencies must be > 0");
    if (q_opt <= 0 || q_mech <= 0)
      throw std::invalid_argument("DeviceParams: quality factors must be > 0");
    if (pump_alpha < 0)
      throw std::invalid_argument("DeviceParams: pump amplitude must be >= 0");
    if (temperature < 0)
      throw std::invalid_argument("DeviceParams: temperature must be >= 0");
    if (pulse_t <= 0)
      throw std::invalid_argument("DeviceParams: pulse duration must be > 0");
  }
};

}  // namespace spinomech
