#pragma once

#include "spinomech/qdyn/hamiltonian.hpp"
#include "spinomech/qdyn/lindblad.hpp"
#include "spinomech/qdyn/state.hpp"

namespace spinomech::qdyn {

struct SwapResult {
  DensityOperator spin_state;  // 2x2 reduced state, index 0 = |down>
  double fidelity = 0;         // <up|rho_spin|up>
  double infidelity = 0;       // 1 - fidelity
  double t_swap = 0;           // pi / (2 g_sm)
};

// Coherent phonon->spin swap under the resonant spin-mechanical coupling
// with thermal phonon jumps (Lindblad evolution for half a Rabi period).
// The pump is off during the swap. The fidelity is reported against the
// excited spin, the target for an initial single phonon; compare the
// infidelity with n_th * gamma_m / g_sm.
SwapResult swap_simulation(const DeviceParams& params,
                           const HilbertSpace& space,
                           const JumpRates& thermal_rates,
                           const Vector& initial_phonon,
                           const LindbladOptions& opts = {});

}  // namespace spinomech::qdyn
