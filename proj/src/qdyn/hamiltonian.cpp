#include "spinomech/qdyn/hamiltonian.hpp"

namespace spinomech::qdyn {

Matrix build_interaction_hamiltonian(const DeviceParams& params,
                                     const HilbertSpace& space) {
  params.validate();
  const Matrix& a = space.photon_lower();
  const Matrix& b = space.phonon_lower();

  Matrix h = Matrix::Zero(space.dim(), space.dim());

  // Pair-creation drive; built as M + M^ so Hermiticity holds elementwise.
  const double drive = params.g_om * params.pump_alpha;
  if (drive != 0.0) {
    Matrix m = drive * (a.adjoint() * b.adjoint());
    h += m + m.adjoint();
  }

  const double delta = params.delta_pump - params.omega_m;
  if (delta != 0.0) h += delta * (b.adjoint() * b);

  if (space.config().include_spin && params.g_sm != 0.0) {
    const Matrix& sm = space.spin_lower();
    Matrix m = params.g_sm * (sm.adjoint() * b);  // s+ b
    h += m + m.adjoint();
  }
  return h;
}

Matrix build_stochastic_hamiltonian(const DeviceParams& params,
                                    const HilbertSpace& space,
                                    const JumpRates& rates) {
  rates.validate();
  Matrix h = build_interaction_hamiltonian(params, space);

  const Matrix& a = space.photon_lower();
  const Matrix& b = space.phonon_lower();
  const Complex half_i(0.0, 0.5);

  if (rates.gamma_a > 0) h -= half_i * rates.gamma_a * (a.adjoint() * a);
  if (rates.gamma_b > 0) h -= half_i * rates.gamma_b * (b.adjoint() * b);
  if (rates.gamma_b_dag > 0)
    h -= half_i * rates.gamma_b_dag * (b * b.adjoint());
  return h;
}

}  // namespace spinomech::qdyn
