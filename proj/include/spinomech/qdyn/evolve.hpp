#pragma once

#include <span>
#include <vector>

#include "spinomech/qdyn/hilbert.hpp"

namespace spinomech::qdyn {

// Grid selection for the propagator table. tol is the target relative
// accuracy of trapezoidal integrals of jump densities along the trajectory;
// the step dt is chosen so (dt*omega)^2/12 <= tol for the relevant rate
// scales. Long pulses with a fast initial decay transient get a two-zone
// grid: a fine uniform window covering the transient, then a uniform tail.
struct EvolveOptions {
  double tol = 1e-6;
  int min_steps = 512;
  int max_steps = 20000;  // per zone
  int num_steps = 0;      // explicit uniform step count; 0 = automatic
};

struct Trajectory {
  Eigen::VectorXd times;  // size M+1
  Matrix states;          // dim x (M+1); column k is psi(t_k)

  int steps() const { return int(times.size()) - 1; }
  Vector state(int k) const { return states.col(k); }
};

// Exact one-step propagators U_k = exp(-i H dt_k) on a fixed time grid.
// Steps share propagators where dt repeats, so conditioned trajectories can
// be advanced in lockstep with the main one.
struct PropagatorTable {
  Eigen::VectorXd times;
  std::vector<Matrix> unique_props;
  std::vector<int> prop_of_step;  // size M

  int steps() const { return int(prop_of_step.size()); }
  const Matrix& step_propagator(int k) const {
    return unique_props[size_t(prop_of_step[size_t(k)])];
  }
};

PropagatorTable make_propagators(const Matrix& h, double t_final,
                                 const EvolveOptions& opts = {});

Trajectory evolve_on(const PropagatorTable& table, const Vector& psi0);

// Integrates d|psi>/dt = -i h |psi> on an automatically chosen grid.
Trajectory evolve(const Vector& psi0, const Matrix& h, double t_final,
                  const EvolveOptions& opts = {});

// Jump probability density along a trajectory for the jump operator c:
//   pdf_c(t) = gamma_c <psi|c^c|psi> / <psi|psi>   (normalized convention)
//   w_c(t)   = gamma_c <psi|c^c|psi>               (unnormalized weight)
// The unnormalized weights satisfy the exact balance
//   1 - |psi(T)|^2 = sum_c integral w_c dt.
struct PdfSamples {
  Eigen::VectorXd pdf;
  Eigen::VectorXd w;
};

PdfSamples jump_pdf(const Trajectory& traj, const Matrix& c, double gamma_c);

// Trapezoidal quadrature on an arbitrary grid; tail variant integrates from
// grid point k0 to the end.
double trapezoid(std::span<const double> times, std::span<const double> values);
double trapezoid_tail(std::span<const double> times,
                      std::span<const double> values, int k0);

}  // namespace spinomech::qdyn
