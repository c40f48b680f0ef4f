#include "spinomech/qdyn/branches.hpp"

#include <cmath>

namespace spinomech::qdyn {

namespace {

// Trapezoid weight of grid point k.
double grid_weight(const Eigen::VectorXd& t, int k) {
  const int m = int(t.size()) - 1;
  double w = 0;
  if (k > 0) w += 0.5 * (t(k) - t(k - 1));
  if (k < m) w += 0.5 * (t(k + 1) - t(k));
  return w;
}

// Inner integral J(tau_k) = int_{tau_k}^T pdf_a(t) dt along trajectories
// conditioned on a jump c at tau_k, all advanced in lockstep with shared
// step propagators. Running trapezoid accumulation keeps memory linear.
Eigen::VectorXd conditioned_photon_tail(const PropagatorTable& table,
                                        const Trajectory& traj,
                                        const Matrix& jump,
                                        const Eigen::VectorXd& na_diag,
                                        double gamma_a) {
  const int m = table.steps();
  const long dim = traj.states.rows();
  Matrix phi = Matrix::Zero(dim, m + 1);
  Eigen::VectorXd tail = Eigen::VectorXd::Zero(m + 1);
  Eigen::VectorXd prev = Eigen::VectorXd::Zero(m + 1);
  std::vector<bool> alive(size_t(m) + 1, false);

  auto photon_pdf = [&](int col) {
    const auto v = phi.col(col);
    const double n2 = v.squaredNorm();
    return n2 > 0 ? gamma_a * na_diag.dot(v.cwiseAbs2()) / n2 : 0.0;
  };

  for (int k = 0; k <= m; ++k) {
    Vector conditioned = jump * traj.states.col(k);
    const double nrm = conditioned.norm();
    if (nrm > 0) {
      phi.col(k) = conditioned / nrm;
      alive[size_t(k)] = true;
      prev(k) = photon_pdf(k);
    }
    if (k == m) break;
    const double dt = table.times(k + 1) - table.times(k);
    phi.leftCols(k + 1) =
        (table.step_propagator(k) * phi.leftCols(k + 1)).eval();
    for (int j = 0; j <= k; ++j) {
      if (!alive[size_t(j)]) continue;
      const double cur = photon_pdf(j);
      tail(j) += 0.5 * (prev(j) + cur) * dt;
      prev(j) = cur;
    }
  }
  return tail;
}

}  // namespace

HeraldingAnalysis analyze_heralding(const DeviceParams& params,
                                    const HilbertSpace& space,
                                    const JumpRates& rates,
                                    const BranchOptions& opts) {
  EvolveOptions eopts = opts.evolve;
  eopts.max_steps = std::min(eopts.max_steps, opts.max_nested_steps);

  const Matrix h = build_stochastic_hamiltonian(params, space, rates);
  const PropagatorTable table = make_propagators(h, params.pulse_t, eopts);
  const Trajectory traj = evolve_on(table, space.vacuum());
  const int m = table.steps();

  const Matrix& a = space.photon_lower();
  const Matrix& b = space.phonon_lower();
  const Eigen::VectorXd na_diag = HilbertSpace::dagger_product_diagonal(a);

  const PdfSamples pa = jump_pdf(traj, a, rates.gamma_a);
  const PdfSamples pb = jump_pdf(traj, b, rates.gamma_b);
  const PdfSamples pbd = jump_pdf(traj, b.adjoint(), rates.gamma_b_dag);

  std::span<const double> ts(traj.times.data(), size_t(m) + 1);

  BranchReport rep;
  rep.p_a = trapezoid(ts, {pa.pdf.data(), size_t(m) + 1});
  rep.p_astar = 1.0 - traj.states.col(m).squaredNorm();

  // Two-jump branches: outer jump at tau weighted by its pdf, inner photon
  // jump integrated along the re-evolved conditioned trajectory.
  for (int which = 0; which < 2; ++which) {
    const bool thermal = which == 1;
    const double rate = thermal ? rates.gamma_b_dag : rates.gamma_b;
    double& dest = thermal ? rep.p_bdag_a : rep.p_ba;
    if (rate <= 0) continue;
    const Matrix jump = thermal ? Matrix(b.adjoint()) : b;
    const Eigen::VectorXd tail =
        conditioned_photon_tail(table, traj, jump, na_diag, rates.gamma_a);
    Eigen::VectorXd outer = (thermal ? pbd.pdf : pb.pdf).cwiseProduct(tail);
    dest = trapezoid(ts, {outer.data(), size_t(m) + 1});
  }
  rep.p_total = rep.p_a + rep.p_ba + rep.p_bdag_a;

  // Heralded phonon state: photon-jump-conditioned states re-evolved to T,
  // renormalized, reduced to the phonon factor and pdf_a-weighted with the
  // same quadrature weights, so the mixture has unit trace by construction.
  const int nb = space.config().n_b;
  Matrix rho_acc = Matrix::Zero(nb, nb);
  double weight_acc = 0;
  {
    Matrix phi = Matrix::Zero(space.dim(), m + 1);
    std::vector<bool> alive(size_t(m) + 1, false);
    for (int k = 0; k <= m; ++k) {
      Vector conditioned = a * traj.states.col(k);
      const double nrm = conditioned.norm();
      if (nrm > 0) {
        phi.col(k) = conditioned / nrm;
        alive[size_t(k)] = true;
      }
      if (k == m) break;
      phi.leftCols(k + 1) =
          (table.step_propagator(k) * phi.leftCols(k + 1)).eval();
    }
    for (int k = 0; k <= m; ++k) {
      if (!alive[size_t(k)]) continue;
      const double wk = grid_weight(traj.times, k) * pa.pdf(k);
      if (wk <= 0) continue;
      Vector fin = phi.col(k);
      const double n2 = fin.squaredNorm();
      if (n2 <= 0) continue;
      rho_acc += (wk / n2) * phonon_reduced(fin, space.config());
      weight_acc += wk;
    }
  }

  HeraldingAnalysis out;
  out.trajectory = traj;
  if (weight_acc > 0) {
    out.rho_a.matrix = rho_acc / weight_acc;
    rep.f0 = out.rho_a.matrix(1, 1).real();
  } else {
    out.rho_a.matrix = Matrix::Zero(nb, nb);
    rep.f0 = 0;
  }
  if (rep.p_total > 0)
    rep.fidelity = (rep.p_a - rep.p_astar) / rep.p_total * rep.f0;
  out.report = rep;
  return out;
}

BranchReport branch_probabilities(const DeviceParams& params,
                                  const HilbertSpace& space,
                                  const JumpRates& rates,
                                  const BranchOptions& opts) {
  return analyze_heralding(params, space, rates, opts).report;
}

std::pair<DensityOperator, double> heralded_state(const DeviceParams& params,
                                                  const HilbertSpace& space,
                                                  const JumpRates& rates,
                                                  const BranchOptions& opts) {
  HeraldingAnalysis an = analyze_heralding(params, space, rates, opts);
  if (an.report.p_a <= 0)
    throw std::runtime_error("heralded_state: p_a is zero, no heralded state");
  return {an.rho_a, an.report.f0};
}

ConvergedHeralding analyze_heralding_converged(const DeviceParams& params,
                                               const HilbertConfig& start,
                                               const JumpRates& rates,
                                               const BranchOptions& opts,
                                               double rel_tol,
                                               int max_doublings) {
  auto rel = [](double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
  };
  ConvergedHeralding out;
  out.cutoffs_used = start;
  out.analysis =
      analyze_heralding(params, HilbertSpace(start), rates, opts);
  for (int d = 0; d < max_doublings; ++d) {
    HilbertConfig doubled = out.cutoffs_used;
    doubled.n_a *= 2;
    doubled.n_b *= 2;
    HeraldingAnalysis fine =
        analyze_heralding(params, HilbertSpace(doubled), rates, opts);
    out.delta_p_a = rel(fine.report.p_a, out.analysis.report.p_a);
    out.delta_f0 = rel(fine.report.f0, out.analysis.report.f0);
    out.analysis = std::move(fine);
    out.cutoffs_used = doubled;
    out.doublings = d + 1;
    if (out.delta_p_a <= rel_tol && out.delta_f0 <= rel_tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

double no_jump_photon_probability(const DeviceParams& params,
                                  const HilbertSpace& space,
                                  const JumpRates& rates,
                                  const EvolveOptions& opts) {
  const Matrix h = build_stochastic_hamiltonian(params, space, rates);
  const Trajectory traj = evolve(space.vacuum(), h, params.pulse_t, opts);
  const PdfSamples pa = jump_pdf(traj, space.photon_lower(), rates.gamma_a);
  return trapezoid({traj.times.data(), size_t(traj.times.size())},
                   {pa.pdf.data(), size_t(pa.pdf.size())});
}

}  // namespace spinomech::qdyn
