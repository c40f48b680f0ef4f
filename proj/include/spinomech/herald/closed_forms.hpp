#pragma once

#include <stdexcept>
#include <string>

namespace spinomech::herald {

// The perturbative closed forms assume alpha*g_om*T_a << 1 and a pulse much
// longer than the cavity lifetime. Instead of refusing inputs outside that
// regime, results carry a validity flag so parameter sweeps stay total.
inline constexpr double perturbative_limit = 0.1;

struct HeraldProbability {
  double value = 0;
  bool perturbative_valid = true;
};

// P = 4 alpha^2 g_om^2 T_a T
HeraldProbability herald_probability(double pump_alpha_sq, double g_om,
                                     double t_a, double pulse_t);

struct HeraldInfidelity {
  double multi_excitation = 0;  // 8 alpha^2 g_om^2 T_a T, exactly 2P
  double thermal = 0;           // (3/4) gamma_m T_a T (3 n_th + 1)
  double total = 0;
  bool perturbative_valid = true;
};

HeraldInfidelity herald_infidelity(double pump_alpha_sq, double g_om,
                                   double t_a, double pulse_t, double gamma_m,
                                   double n_th);

enum class Detector { one, two };

struct EntanglingEvent {
  double p_e = 0;
  std::string state_label;  // |01>+|10> for detector one, |01>-|10> for two
};

// Two nodes pumped in parallel behind a path-erasing beamsplitter: the
// heralding probability doubles and the detector choice fixes the relative
// phase (the assignment itself is a convention).
EntanglingEvent entangling_extension(double p, Detector detector);

// Swap-gate infidelity estimate n_th * gamma_m / g_sm.
double swap_infidelity(double n_th, double gamma_m, double g_sm);

}  // namespace spinomech::herald
