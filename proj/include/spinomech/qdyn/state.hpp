#pragma once

#include "spinomech/qdyn/hilbert.hpp"

namespace spinomech::qdyn {

// Pure state over the tensor-product basis. The squared norm may only decay
// under the stochastic Hamiltonian, so it stays in [0, 1+tol] for normalized
// initial states.
struct PureState {
  Vector amplitudes;

  double squared_norm() const { return amplitudes.squaredNorm(); }

  void validate(double tol = 1e-9) const {
    if (!amplitudes.allFinite())
      throw std::runtime_error("PureState: non-finite amplitudes");
    const double n2 = squared_norm();
    if (n2 < 0 || n2 > 1 + tol)
      throw std::runtime_error("PureState: squared norm outside [0, 1+tol]");
  }
};

struct DensityOperator {
  Matrix matrix;

  double trace() const { return matrix.trace().real(); }

  void validate(double tol = 1e-9) const;
};

// Reduced phonon density matrix of a pure state (photon and spin traced out).
Matrix phonon_reduced(const Vector& psi, const HilbertConfig& cfg);

// Reduced density matrices of a full density operator.
Matrix phonon_reduced(const Matrix& rho, const HilbertConfig& cfg);
Matrix spin_reduced(const Matrix& rho, const HilbertConfig& cfg);

}  // namespace spinomech::qdyn
