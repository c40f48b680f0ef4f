#pragma once

#include "spinomech/device.hpp"
#include "spinomech/qdyn/hilbert.hpp"

namespace spinomech::qdyn {

// Decay rates attached to the three jump operators a, b and b^dagger.
struct JumpRates {
  double gamma_a = 0;
  double gamma_b = 0;
  double gamma_b_dag = 0;

  void validate() const {
    if (!(gamma_a >= 0 && gamma_b >= 0 && gamma_b_dag >= 0))
      throw std::invalid_argument("JumpRates: rates must be >= 0 and finite");
  }
};

// H/hbar in the interaction frame at sideband resonance: the blue-detuned
// drive term g_om*alpha*(a^ b^ + a b) is time independent, residual detuning
// delta = delta_pump - omega_m enters as delta * b^ b, and the spin block
// g_sm*(s+ b + s- b^) is added only when the space carries a spin.
// The returned matrix is exactly Hermitian.
Matrix build_interaction_hamiltonian(const DeviceParams& params,
                                     const HilbertSpace& space);

// H_stoch = H_int - (i/2) * sum_c gamma_c c^ c over c in {a, b, b^}.
// c^ c is formed from the truncated operator matrices, which keeps the norm
// balance identity exact on the truncated space: for the jump c = b^ this
// gives a vacuum decay of -(i/2) gamma_b^ as bb^ = b^b + 1.
Matrix build_stochastic_hamiltonian(const DeviceParams& params,
                                    const HilbertSpace& space,
                                    const JumpRates& rates);

}  // namespace spinomech::qdyn
