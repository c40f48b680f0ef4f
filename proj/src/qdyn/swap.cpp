#include "spinomech/qdyn/swap.hpp"

#include <cmath>
#include <numbers>

namespace spinomech::qdyn {

SwapResult swap_simulation(const DeviceParams& params,
                           const HilbertSpace& space,
                           const JumpRates& thermal_rates,
                           const Vector& initial_phonon,
                           const LindbladOptions& opts) {
  if (!space.config().include_spin)
    throw std::invalid_argument("swap_simulation: space must include the spin");
  if (params.g_sm == 0)
    throw std::invalid_argument("swap_simulation: g_sm must be nonzero");
  const int nb = space.config().n_b;
  if (initial_phonon.size() != nb)
    throw std::invalid_argument("swap_simulation: bad phonon state size");

  // Pump off during the swap; spin resonant with the phonon.
  DeviceParams p = params;
  p.pump_alpha = 0;
  p.delta_pump = p.omega_m;

  const Matrix h = build_interaction_hamiltonian(p, space);

  // |0>_a (x) phonon (x) |down>
  Vector psi0 = Vector::Zero(space.dim());
  for (int ib = 0; ib < nb; ++ib) psi0(space.index(0, ib, 0)) = initial_phonon(ib);
  psi0.normalize();
  Matrix rho0 = psi0 * psi0.adjoint();

  std::vector<std::pair<Matrix, double>> jumps;
  const Matrix& b = space.phonon_lower();
  if (thermal_rates.gamma_b > 0) jumps.push_back({b, thermal_rates.gamma_b});
  if (thermal_rates.gamma_b_dag > 0)
    jumps.push_back({Matrix(b.adjoint()), thermal_rates.gamma_b_dag});

  SwapResult out;
  out.t_swap = std::numbers::pi / (2.0 * std::abs(params.g_sm));
  Matrix rho = lindblad_evolve(rho0, h, jumps, out.t_swap, opts);
  out.spin_state.matrix = spin_reduced(rho, space.config());
  out.fidelity = out.spin_state.matrix(1, 1).real();
  out.infidelity = 1.0 - out.fidelity;
  return out;
}

}  // namespace spinomech::qdyn
