#include "spinomech/qdyn/state.hpp"

#include <Eigen/Eigenvalues>

namespace spinomech::qdyn {

void DensityOperator::validate(double tol) const {
  if (!matrix.allFinite())
    throw std::runtime_error("DensityOperator: non-finite entries");
  if (matrix.rows() != matrix.cols())
    throw std::runtime_error("DensityOperator: not square");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw std::runtime_error("DensityOperator: not Hermitian within tolerance");
  const double tr = trace();
  if (tr < -tol || tr > 1 + tol)
    throw std::runtime_error("DensityOperator: trace outside [0, 1+tol]");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (matrix + matrix.adjoint()),
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol * std::max(1.0, tr))
    throw std::runtime_error("DensityOperator: negative eigenvalue");
}

Matrix phonon_reduced(const Vector& psi, const HilbertConfig& cfg) {
  if (psi.size() != cfg.dim())
    throw std::invalid_argument("phonon_reduced: dimension mismatch");
  const int na = cfg.n_a, nb = cfg.n_b, ns = cfg.spin_dim();
  Matrix rho = Matrix::Zero(nb, nb);
  for (int ia = 0; ia < na; ++ia)
    for (int is = 0; is < ns; ++is)
      for (int i = 0; i < nb; ++i) {
        const Complex ci = psi((ia * nb + i) * ns + is);
        if (ci == Complex(0, 0)) continue;
        for (int j = 0; j < nb; ++j)
          rho(i, j) += ci * std::conj(psi((ia * nb + j) * ns + is));
      }
  return rho;
}

Matrix phonon_reduced(const Matrix& rho, const HilbertConfig& cfg) {
  if (rho.rows() != cfg.dim() || rho.cols() != cfg.dim())
    throw std::invalid_argument("phonon_reduced: dimension mismatch");
  const int na = cfg.n_a, nb = cfg.n_b, ns = cfg.spin_dim();
  Matrix out = Matrix::Zero(nb, nb);
  for (int ia = 0; ia < na; ++ia)
    for (int is = 0; is < ns; ++is)
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
          out(i, j) += rho((ia * nb + i) * ns + is, (ia * nb + j) * ns + is);
  return out;
}

Matrix spin_reduced(const Matrix& rho, const HilbertConfig& cfg) {
  if (!cfg.include_spin)
    throw std::invalid_argument("spin_reduced: space carries no spin");
  if (rho.rows() != cfg.dim() || rho.cols() != cfg.dim())
    throw std::invalid_argument("spin_reduced: dimension mismatch");
  const int na = cfg.n_a, nb = cfg.n_b;
  Matrix out = Matrix::Zero(2, 2);
  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib) {
      const int base = (ia * nb + ib) * 2;
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) out(s, t) += rho(base + s, base + t);
    }
  return out;
}

}  // namespace spinomech::qdyn
