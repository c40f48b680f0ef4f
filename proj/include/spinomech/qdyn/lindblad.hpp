#pragma once

#include <utility>
#include <vector>

#include "spinomech/qdyn/hilbert.hpp"

namespace spinomech::qdyn {

struct LindbladOptions {
  double rtol = 1e-8;
  double atol = 1e-12;
  int max_dim = 512;        // dense representation limit
  double min_step = 0.0;    // 0 = no floor
};

// Integrates drho/dt = -i[H,rho] + sum_c gamma_c (c rho c^ - 1/2 {c^c, rho})
// with an adaptive embedded Runge-Kutta 5(4) scheme. The drift is evaluated
// as -i(K - K^) with K = H_eff rho, H_eff = H - (i/2) sum gamma_c c^c, and
// jump operators are applied in sparse form. Hermiticity is restored after
// every accepted step; the drift conserves the trace identically.
Matrix lindblad_evolve(const Matrix& rho0, const Matrix& h,
                       const std::vector<std::pair<Matrix, double>>& jumps,
                       double t_final, const LindbladOptions& opts = {});

}  // namespace spinomech::qdyn
