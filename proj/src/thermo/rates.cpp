#include "spinomech/thermo/rates.hpp"

#include <cmath>

#include "spinomech/constants.hpp"

namespace spinomech::thermo {

double thermal_occupation(double temperature, double omega_m,
                          OccupationModel model) {
  if (temperature < 0)
    throw std::invalid_argument("thermal_occupation: temperature < 0");
  if (omega_m <= 0)
    throw std::invalid_argument("thermal_occupation: omega_m must be > 0");
  if (temperature == 0) return 0.0;
  const double x = hbar * omega_m / (k_boltzmann * temperature);
  switch (model) {
    case OccupationModel::linear:
      return 1.0 / x;
    case OccupationModel::bose:
      return 1.0 / std::expm1(x);
  }
  throw std::logic_error("thermal_occupation: bad model");
}

RateSet decay_rates(const DeviceParams& params, double n_th) {
  params.validate();
  if (!(n_th >= 0))
    throw std::invalid_argument("decay_rates: n_th must be >= 0");
  RateSet r;
  r.n_th = n_th;
  r.gamma_a = params.omega_a / params.q_opt;
  r.t_a = 1.0 / r.gamma_a;
  r.gamma_m = 2.0 * params.omega_m / params.q_mech;
  r.gamma_b = r.gamma_m * (n_th + 1.0) / 2.0;
  r.gamma_b_dag = r.gamma_m * n_th / 2.0;
  return r;
}

}  // namespace spinomech::thermo
