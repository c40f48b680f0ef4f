#include "spinomech/qdyn/lindblad.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>

namespace spinomech::qdyn {

namespace {

using Sparse = Eigen::SparseMatrix<Complex>;

struct Generator {
  Sparse h_eff;  // H - (i/2) sum gamma c^c
  std::vector<Sparse> c;
  std::vector<Sparse> c_dag;
  std::vector<double> gamma;

  Matrix operator()(const Matrix& rho) const {
    Matrix k = h_eff * rho;
    Matrix out = Complex(0, -1) * (k - k.adjoint().eval());
    for (size_t j = 0; j < c.size(); ++j) {
      Matrix s = c[j] * rho;
      out.noalias() += gamma[j] * (s * c_dag[j]);
    }
    return out;
  }
};

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// y5 - y4hat error weights (b - bhat), with the FSAL stage 7.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

Matrix lindblad_evolve(const Matrix& rho0, const Matrix& h,
                       const std::vector<std::pair<Matrix, double>>& jumps,
                       double t_final, const LindbladOptions& opts) {
  const long dim = rho0.rows();
  if (rho0.cols() != dim || h.rows() != dim || h.cols() != dim)
    throw std::invalid_argument("lindblad_evolve: dimension mismatch");
  if (dim > opts.max_dim)
    throw std::invalid_argument("lindblad_evolve: dimension limit exceeded");
  if (!(t_final >= 0) || !std::isfinite(t_final))
    throw std::invalid_argument("lindblad_evolve: bad t_final");
  if (t_final == 0) return rho0;

  Generator gen;
  Matrix h_eff = h;
  for (const auto& [c, gamma] : jumps) {
    if (gamma < 0)
      throw std::invalid_argument("lindblad_evolve: negative jump rate");
    if (gamma == 0) continue;
    h_eff -= Complex(0, 0.5) * gamma * (c.adjoint() * c);
    gen.c.push_back(c.sparseView(1.0, 1e-300));
    gen.c_dag.push_back(c.adjoint().sparseView(1.0, 1e-300));
    gen.gamma.push_back(gamma);
  }
  gen.h_eff = h_eff.sparseView(1.0, 1e-300);

  Matrix rho = 0.5 * (rho0 + rho0.adjoint());
  Matrix k1 = gen(rho);

  // Initial step from the generator scale.
  const double scale0 = std::max(k1.cwiseAbs().maxCoeff(), 1e-300);
  double dt = std::min(t_final, 0.01 * std::max(rho.cwiseAbs().maxCoeff(), opts.atol) / scale0);
  double t = 0;

  Matrix k2, k3, k4, k5, k6, k7, y;
  int rejected_in_row = 0;
  while (t < t_final) {
    dt = std::min(dt, t_final - t);
    if (opts.min_step > 0) dt = std::max(dt, opts.min_step);

    k2 = gen(rho + dt * (a21 * k1));
    k3 = gen(rho + dt * (a31 * k1 + a32 * k2));
    k4 = gen(rho + dt * (a41 * k1 + a42 * k2 + a43 * k3));
    k5 = gen(rho + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    k6 = gen(rho + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    y = rho + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    k7 = gen(y);

    const Matrix err_m =
        dt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double tol =
        opts.atol + opts.rtol * std::max(rho.cwiseAbs().maxCoeff(),
                                         y.cwiseAbs().maxCoeff());
    const double err = err_m.cwiseAbs().maxCoeff() / tol;

    if (err <= 1.0 || (opts.min_step > 0 && dt <= opts.min_step)) {
      t += dt;
      rho = 0.5 * (y + y.adjoint().eval());
      k1 = k7;  // FSAL (Hermitization drift is within the error tolerance)
      rejected_in_row = 0;
    } else {
      ++rejected_in_row;
      if (rejected_in_row > 200)
        throw std::runtime_error("lindblad_evolve: step-size failure");
    }
    const double fac =
        std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    dt *= fac;
    if (!(dt > 0) || !std::isfinite(dt))
      throw std::runtime_error("lindblad_evolve: step-size failure");
  }
  if (!rho.allFinite())
    throw std::runtime_error("lindblad_evolve: non-finite state");
  return rho;
}

}  // namespace spinomech::qdyn
