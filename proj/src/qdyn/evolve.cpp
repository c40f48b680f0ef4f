#include "spinomech/qdyn/evolve.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace spinomech::qdyn {

namespace {

struct RateScales {
  double hermitian;  // Gershgorin bound of (h+h^)/2
  double decay;      // fastest local norm-decay rate, 2*max(-Im h_ii)
};

RateScales estimate_scales(const Matrix& h) {
  const Matrix herm = 0.5 * (h + h.adjoint());
  double w = 0;
  for (int i = 0; i < herm.rows(); ++i)
    w = std::max(w, herm.row(i).cwiseAbs().sum());
  double g = 0;
  for (int i = 0; i < h.rows(); ++i) g = std::max(g, -2.0 * h(i, i).imag());
  return {w, std::max(g, 0.0)};
}

void append_uniform(std::vector<double>& times, double from, double to, int n) {
  for (int k = 1; k <= n; ++k)
    times.push_back(from + (to - from) * double(k) / double(n));
  times.back() = to;  // exact endpoint
}

}  // namespace

PropagatorTable make_propagators(const Matrix& h, double t_final,
                                 const EvolveOptions& opts) {
  if (!(t_final > 0) || !std::isfinite(t_final))
    throw std::invalid_argument("make_propagators: t_final must be > 0");
  if (!h.allFinite())
    throw std::invalid_argument("make_propagators: non-finite Hamiltonian");

  std::vector<double> times{0.0};
  if (opts.num_steps > 0) {
    append_uniform(times, 0.0, t_final, opts.num_steps);
  } else {
    const RateScales sc = estimate_scales(h);
    const double theta = std::sqrt(12.0 * opts.tol);
    const double omega_fast = sc.hermitian + sc.decay;
    const auto clampi = [&](double x) {
      return int(std::clamp(std::ceil(x), double(opts.min_steps),
                            double(opts.max_steps)));
    };
    const double m_uniform =
        omega_fast > 0 ? t_final * omega_fast / theta : double(opts.min_steps);
    const double window = sc.decay > 0 ? 40.0 / sc.decay : t_final;
    if (m_uniform <= double(opts.max_steps) || window >= t_final) {
      append_uniform(times, 0.0, t_final, clampi(m_uniform));
    } else {
      // Fine window over the decay transient, uniform tail for the slow
      // drive dynamics.
      append_uniform(times, 0.0, window, clampi(window * omega_fast / theta));
      append_uniform(times, window, t_final,
                     clampi((t_final - window) * sc.hermitian / theta));
    }
  }

  PropagatorTable table;
  table.times = Eigen::Map<Eigen::VectorXd>(times.data(), long(times.size()));
  const int m = int(times.size()) - 1;
  table.prop_of_step.resize(size_t(m));
  std::vector<double> dts;
  const Complex minus_i(0.0, -1.0);
  for (int k = 0; k < m; ++k) {
    const double dt = times[size_t(k) + 1] - times[size_t(k)];
    int idx = -1;
    for (size_t j = 0; j < dts.size(); ++j)
      if (std::abs(dts[j] - dt) <= 1e-12 * dt) {
        idx = int(j);
        break;
      }
    if (idx < 0) {
      dts.push_back(dt);
      table.unique_props.push_back(((minus_i * dt) * h).exp());
      idx = int(dts.size()) - 1;
    }
    table.prop_of_step[size_t(k)] = idx;
  }
  return table;
}

Trajectory evolve_on(const PropagatorTable& table, const Vector& psi0) {
  const int m = table.steps();
  Trajectory traj;
  traj.times = table.times;
  traj.states.resize(psi0.size(), m + 1);
  traj.states.col(0) = psi0;
  for (int k = 0; k < m; ++k)
    traj.states.col(k + 1).noalias() =
        table.step_propagator(k) * traj.states.col(k);
  if (!traj.states.allFinite())
    throw std::runtime_error("evolve: non-finite amplitudes encountered");
  return traj;
}

Trajectory evolve(const Vector& psi0, const Matrix& h, double t_final,
                  const EvolveOptions& opts) {
  if (!psi0.allFinite())
    throw std::invalid_argument("evolve: non-finite initial state");
  return evolve_on(make_propagators(h, t_final, opts), psi0);
}

PdfSamples jump_pdf(const Trajectory& traj, const Matrix& c, double gamma_c) {
  if (gamma_c < 0) throw std::invalid_argument("jump_pdf: negative rate");
  const Eigen::VectorXd diag = HilbertSpace::dagger_product_diagonal(c);
  const bool diagonal =
      (c.adjoint() * c - Matrix(diag.cast<Complex>().asDiagonal()))
          .cwiseAbs()
          .maxCoeff() == 0.0;

  const int n = int(traj.times.size());
  PdfSamples out;
  out.pdf.resize(n);
  out.w.resize(n);
  for (int k = 0; k < n; ++k) {
    const auto psi = traj.states.col(k);
    const double norm2 = psi.squaredNorm();
    if (norm2 <= 0)
      throw std::runtime_error("jump_pdf: zero-norm state sample");
    double expect;
    if (diagonal)
      expect = diag.dot(psi.cwiseAbs2());
    else
      expect = (c * psi).squaredNorm();
    out.w(k) = gamma_c * expect;
    out.pdf(k) = out.w(k) / norm2;
  }
  return out;
}

double trapezoid(std::span<const double> times, std::span<const double> values) {
  return trapezoid_tail(times, values, 0);
}

double trapezoid_tail(std::span<const double> times,
                      std::span<const double> values, int k0) {
  if (times.size() != values.size())
    throw std::invalid_argument("trapezoid: size mismatch");
  double acc = 0;
  for (size_t k = size_t(k0) + 1; k < times.size(); ++k)
    acc += 0.5 * (values[k] + values[k - 1]) * (times[k] - times[k - 1]);
  return acc;
}

}  // namespace spinomech::qdyn
