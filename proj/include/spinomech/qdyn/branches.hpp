#pragma once

#include <optional>

#include "spinomech/qdyn/evolve.hpp"
#include "spinomech/qdyn/hamiltonian.hpp"
#include "spinomech/qdyn/state.hpp"

namespace spinomech::qdyn {

// Heralding branch probabilities over one pump pulse. p_total sums the
// branches that trigger a detector click; fidelity is assembled as
// ((p_a - p_astar)/p_total) * f0 and is absent when p_total is zero.
struct BranchReport {
  double p_a = 0;        // photon jump on the no-jump trajectory
  double p_astar = 0;    // 1 - <psi(T)|psi(T)>
  double p_ba = 0;       // phonon loss jump followed by a photon jump
  double p_bdag_a = 0;   // thermal phonon jump followed by a photon jump
  double p_total = 0;
  double f0 = 0;         // <1|rho_a|1> on the heralded phonon state
  std::optional<double> fidelity;
};

struct BranchOptions {
  EvolveOptions evolve;
  // Conditioned re-evolutions advance in lockstep on the main grid; their
  // cost is O(steps^2), so the grid is capped separately.
  int max_nested_steps = 3000;
};

struct HeraldingAnalysis {
  BranchReport report;
  DensityOperator rho_a;  // heralded phonon state (reduced), unit trace
  Trajectory trajectory;  // no-jump trajectory (kept for diagnostics)
};

// Full deterministic-quadrature branch analysis: evolves |0..0> under the
// stochastic Hamiltonian, integrates the photon-jump density for p_a,
// re-evolves jump-conditioned states for the two-jump branches, and
// accumulates the pdf_a-weighted heralded phonon density matrix.
HeraldingAnalysis analyze_heralding(const DeviceParams& params,
                                    const HilbertSpace& space,
                                    const JumpRates& rates,
                                    const BranchOptions& opts = {});

BranchReport branch_probabilities(const DeviceParams& params,
                                  const HilbertSpace& space,
                                  const JumpRates& rates,
                                  const BranchOptions& opts = {});

// Heralded phonon state and its single-phonon fidelity f0 = <1|rho_a|1>.
std::pair<DensityOperator, double> heralded_state(
    const DeviceParams& params, const HilbertSpace& space,
    const JumpRates& rates, const BranchOptions& opts = {});

// Photon-jump probability from the no-jump trajectory alone (no nested
// branch quadrature); cheap enough for long pulses.
double no_jump_photon_probability(const DeviceParams& params,
                                  const HilbertSpace& space,
                                  const JumpRates& rates,
                                  const EvolveOptions& opts = {});

// Automatic cutoff-convergence doubling: re-runs the analysis with both mode
// cutoffs doubled until p_a and f0 move by less than rel_tol, up to
// max_doublings. The returned analysis is the finest one.
struct ConvergedHeralding {
  HeraldingAnalysis analysis;
  HilbertConfig cutoffs_used;
  double delta_p_a = 0;  // relative change on the last doubling
  double delta_f0 = 0;
  int doublings = 0;
  bool converged = false;
};

ConvergedHeralding analyze_heralding_converged(
    const DeviceParams& params, const HilbertConfig& start,
    const JumpRates& rates, const BranchOptions& opts = {},
    double rel_tol = 1e-3, int max_doublings = 2);

}  // namespace spinomech::qdyn
