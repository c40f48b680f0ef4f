#include "spinomech/herald/closed_forms.hpp"

#include <cmath>

namespace spinomech::herald {

namespace {

void check_inputs(double pump_alpha_sq, double t_a, double pulse_t) {
  if (!(pump_alpha_sq >= 0))
    throw std::invalid_argument("herald: pump_alpha_sq must be >= 0");
  if (!(t_a > 0)) throw std::invalid_argument("herald: t_a must be > 0");
  if (!(pulse_t >= 0))
    throw std::invalid_argument("herald: pulse_t must be >= 0");
}

bool perturbative(double pump_alpha_sq, double g_om, double t_a) {
  return std::sqrt(pump_alpha_sq) * std::abs(g_om) * t_a < perturbative_limit;
}

}  // namespace

HeraldProbability herald_probability(double pump_alpha_sq, double g_om,
                                     double t_a, double pulse_t) {
  check_inputs(pump_alpha_sq, t_a, pulse_t);
  HeraldProbability out;
  out.value = 4.0 * pump_alpha_sq * g_om * g_om * t_a * pulse_t;
  out.perturbative_valid = perturbative(pump_alpha_sq, g_om, t_a);
  return out;
}

HeraldInfidelity herald_infidelity(double pump_alpha_sq, double g_om,
                                   double t_a, double pulse_t, double gamma_m,
                                   double n_th) {
  check_inputs(pump_alpha_sq, t_a, pulse_t);
  if (!(gamma_m >= 0))
    throw std::invalid_argument("herald: gamma_m must be >= 0");
  if (!(n_th >= 0)) throw std::invalid_argument("herald: n_th must be >= 0");
  HeraldInfidelity out;
  out.multi_excitation =
      2.0 * herald_probability(pump_alpha_sq, g_om, t_a, pulse_t).value;
  out.thermal = 0.75 * gamma_m * t_a * pulse_t * (3.0 * n_th + 1.0);
  out.total = out.multi_excitation + out.thermal;
  out.perturbative_valid = perturbative(pump_alpha_sq, g_om, t_a);
  return out;
}

EntanglingEvent entangling_extension(double p, Detector detector) {
  if (!(p >= 0 && p <= 0.5))
    throw std::domain_error("entangling_extension: p must be in [0, 1/2]");
  EntanglingEvent out;
  out.p_e = 2.0 * p;
  out.state_label = detector == Detector::one ? "|01>+|10>" : "|01>-|10>";
  return out;
}

double swap_infidelity(double n_th, double gamma_m, double g_sm) {
  if (!(n_th >= 0) || !(gamma_m >= 0))
    throw std::invalid_argument("swap_infidelity: rates must be >= 0");
  if (g_sm == 0)
    throw std::invalid_argument("swap_infidelity: g_sm must be nonzero");
  return n_th * gamma_m / std::abs(g_sm);
}

}  // namespace spinomech::herald
