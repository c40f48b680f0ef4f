#include "spinomech/cli/runs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <thread>

#include "spinomech/constants.hpp"
#include "spinomech/herald/closed_forms.hpp"
#include "spinomech/herald/tms.hpp"
#include "spinomech/qdyn/lindblad.hpp"
#include "spinomech/thermo/quality.hpp"

namespace spinomech::cli {

namespace {

const std::vector<std::string> axis_names = {
    "temperature", "pump_alpha_sq", "pump_alpha",  "pulse_t", "pulse_t_over_ta",
    "g_om_hz",     "g_sm_hz",       "q_opt",       "q_mech",  "omega_m_hz"};

// applies a plain axis value; pulse_t_over_ta is deferred
void apply_axis(DeviceParams& p, const std::string& name, double v) {
  if (name == "temperature")
    p.temperature = v;
  else if (name == "pump_alpha_sq")
    p.pump_alpha = std::sqrt(v);
  else if (name == "pump_alpha")
    p.pump_alpha = v;
  else if (name == "pulse_t")
    p.pulse_t = v;
  else if (name == "g_om_hz")
    p.g_om = two_pi * v;
  else if (name == "g_sm_hz")
    p.g_sm = two_pi * v;
  else if (name == "q_opt")
    p.q_opt = v;
  else if (name == "q_mech")
    p.q_mech = v;
  else if (name == "omega_m_hz")
    p.omega_m = two_pi * v;
}

void parallel_rows(size_t n, int jobs,
                   const std::function<void(size_t)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

void validate_axes(const std::vector<AxisSpec>& axes) {
  if (axes.empty())
    throw std::invalid_argument("sweep: at least one axis is required");
  for (const auto& a : axes) {
    if (std::find(axis_names.begin(), axis_names.end(), a.name) ==
        axis_names.end())
      throw std::invalid_argument("sweep: unknown axis parameter `" + a.name +
                                  "`");
    if (a.values.empty())
      throw std::invalid_argument("sweep: axis `" + a.name + "` has no values");
    for (double v : a.values)
      if (!std::isfinite(v))
        throw std::invalid_argument("sweep: axis `" + a.name +
                                    "` has a non-finite value");
  }
}

ResultTable run_herald_sweep(const HeraldSweepSpec& spec) {
  validate_axes(spec.axes);
  if (spec.q_from_material && !spec.material)
    throw std::invalid_argument(
        "herald sweep: material model requested without a material table");

  std::vector<std::string> columns = {
      "temperature",     "pump_alpha_sq",  "pulse_t",  "pulse_t_over_ta",
      "n_th",            "q_mech",         "gamma_m",  "t_a",
      "p_closed",        "p_valid",        "infidelity_multi",
      "infidelity_thermal", "one_minus_f", "herald_rate", "p_entangle"};
  std::vector<std::string> units = {"K",  "",      "s",     "", "", "",
                                    "1/s", "s",    "",      "", "",
                                    "",    "",     "1/s",   ""};
  const bool with_traj = spec.engine != SweepEngine::closed_form;
  if (with_traj) {
    for (const char* c : {"p_a_traj", "p_astar_traj", "p_ba_traj",
                          "p_bdaga_traj", "p_total_traj", "f0_traj",
                          "fidelity_traj"}) {
      columns.push_back(c);
      units.push_back("");
    }
  }
  ResultTable table("herald-sweep", columns, units);

  size_t n = 1;
  for (const auto& a : spec.axes) n *= a.values.size();

  std::vector<std::vector<double>> rows(n);
  std::vector<std::string> reasons(n);

  parallel_rows(n, spec.jobs, [&](size_t idx) {
    // decode the cartesian index, first axis slowest
    std::vector<double> coords(spec.axes.size());
    {
      size_t rem = idx;
      for (size_t a = spec.axes.size(); a-- > 0;) {
        const auto& ax = spec.axes[a];
        coords[a] = ax.values[rem % ax.values.size()];
        rem /= ax.values.size();
      }
    }
    std::vector<double> row;
    try {
      DeviceParams p = spec.base;
      std::optional<double> pulse_over_ta;
      for (size_t a = 0; a < spec.axes.size(); ++a) {
        if (spec.axes[a].name == "pulse_t_over_ta")
          pulse_over_ta = coords[a];
        else
          apply_axis(p, spec.axes[a].name, coords[a]);
      }
      if (spec.q_from_material)
        p.q_mech = thermo::combined_q(p.omega_m, p.temperature,
                                      *spec.material, spec.q_clamp)
                       .q_total;
      const double n_th =
          thermo::thermal_occupation(p.temperature, p.omega_m, spec.occupation);
      // resolve pulse duration before validating the full parameter set
      if (pulse_over_ta) p.pulse_t = *pulse_over_ta * p.q_opt / p.omega_a;
      thermo::RateSet rates = thermo::decay_rates(p, n_th);

      const auto prob = herald::herald_probability(
          p.pump_alpha * p.pump_alpha, p.g_om, rates.t_a, p.pulse_t);
      const auto infid = herald::herald_infidelity(
          p.pump_alpha * p.pump_alpha, p.g_om, rates.t_a, p.pulse_t,
          rates.gamma_m, n_th);
      double p_entangle = std::numeric_limits<double>::quiet_NaN();
      if (prob.value <= 0.5)
        p_entangle =
            herald::entangling_extension(prob.value, herald::Detector::one)
                .p_e;
      else
        reasons[idx] = "p > 1/2, entangling extension undefined";

      row = {p.temperature,
             p.pump_alpha * p.pump_alpha,
             p.pulse_t,
             p.pulse_t / rates.t_a,
             n_th,
             p.q_mech,
             rates.gamma_m,
             rates.t_a,
             prob.value,
             prob.perturbative_valid ? 1.0 : 0.0,
             infid.multi_excitation,
             infid.thermal,
             infid.total,
             prob.value / p.pulse_t,
             p_entangle};
      if (with_traj) {
        qdyn::HilbertSpace space(spec.hilbert);
        qdyn::HeraldingAnalysis an = qdyn::analyze_heralding(
            p, space, rates.jump_rates(), spec.branch);
        row.insert(row.end(),
                   {an.report.p_a, an.report.p_astar, an.report.p_ba,
                    an.report.p_bdag_a, an.report.p_total, an.report.f0,
                    an.report.fidelity.value_or(
                        std::numeric_limits<double>::quiet_NaN())});
        if (!an.report.fidelity) reasons[idx] = "p_total = 0";
      }
      rows[idx] = std::move(row);
    } catch (const std::exception& e) {
      rows[idx].assign(columns.size(),
                       std::numeric_limits<double>::quiet_NaN());
      reasons[idx] = e.what();
    }
  });

  for (size_t i = 0; i < n; ++i)
    table.add_row(std::move(rows[i]), "", std::move(reasons[i]));
  return table;
}

ResultTable run_q_temperature(const QTemperatureSpec& spec) {
  if (spec.temperatures.empty())
    throw std::invalid_argument("q-temp: temperature list is empty");
  if (!(spec.omega_m > 0))
    throw std::invalid_argument("q-temp: omega_m must be > 0");

  ResultTable table(
      "q-temp",
      {"temperature", "q_clamp", "q_akhiezer", "q_landau_rumer", "q_total"},
      {"K", "", "", "", ""});
  table.set_label_column("dominant");

  for (double t : spec.temperatures) {
    try {
      thermo::CombinedQ q =
          thermo::combined_q(spec.omega_m, t, spec.material, spec.q_clamp);
      table.add_row({t, q.q_clamp, q.q_akhiezer, q.q_landau_rumer, q.q_total},
                    thermo::loss_channel_name(q.dominant));
    } catch (const std::exception& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      table.add_row({t, spec.q_clamp, nan, nan, nan}, "error", e.what());
    }
  }
  return table;
}

void run_geometry(const GeometrySpec& spec) {
  modefields::TaperGeometry geom = modefields::taper_geometry(spec.taper);
  modefields::write_polyline_csv(spec.polyline_path, geom);
  modefields::write_schedule_csv(spec.schedule_path, geom);
}

ResultTable run_couplings(const CouplingsSpec& spec) {
  if (spec.alphas.empty())
    throw std::invalid_argument("couplings: empty alpha grid");
  modefields::ModeFieldData fields =
      modefields::load_field_export(spec.volume_path, spec.surface_path);

  const modefields::EffectiveMass em =
      modefields::effective_mass_and_xzpf(fields);
  // a strain-free export has no mechanical energy density; keep the coupling
  // columns and report the volumes as undefined
  modefields::ModeVolumes volumes;
  std::string volume_reason;
  try {
    volumes = modefields::mode_volumes(fields, spec.bulk);
  } catch (const std::exception& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    volumes = {nan, nan, nan, nan, nan, nan, nan, nan, nan};
    volume_reason = e.what();
  }

  ResultTable table(
      "couplings",
      {"alpha",      "g_pe",      "g_mb",      "g_om",      "gsm_max",
       "gsm_max_x",  "gsm_max_y", "gsm_max_z", "x_zpf",     "m_eff",
       "v_mech",     "v_opt",     "mech_over_lp3", "mech_over_ls3",
       "opt_over_lambda3", "opt_over_lambda_n3"},
      {"rad", "rad/s", "rad/s", "rad/s", "rad/s", "m", "m", "m", "m", "kg",
       "m^3", "m^3", "", "", "", ""});

  for (double alpha : spec.alphas) {
    modefields::CrystalOrientation orient = spec.orientation;
    orient.alpha = alpha;
    const double g_pe =
        modefields::coupling_gpe(fields, orient, spec.photoelastic,
                                 spec.bulk.refractive_index, em.x_zpf);
    const double g_mb =
        fields.surface.empty() ? 0.0
                               : modefields::coupling_gmb(fields, em.x_zpf);
    const modefields::GsmMap gsm = modefields::gsm_map(
        fields, orient, spec.strain_susceptibility, em.x_zpf);
    table.add_row({alpha, g_pe, g_mb, g_pe + g_mb, gsm.max_value,
                   gsm.argmax_position(0), gsm.argmax_position(1),
                   gsm.argmax_position(2), em.x_zpf, em.m_eff, volumes.v_mech,
                   volumes.v_opt, volumes.mech_over_lp3, volumes.mech_over_ls3,
                   volumes.opt_over_lambda3, volumes.opt_over_lambda_n3},
                  "", volume_reason);
  }
  return table;
}

// ---------------------------------------------------------------------------
// validation suite

namespace {

struct ValidationSink {
  ResultTable table{"validate",
                    {"value", "reference", "deviation", "tolerance", "pass"},
                    {"", "", "", "", ""}};
  bool all_passed = true;
  double tol_scale = 1.0;

  ValidationSink() { table.set_label_column("check"); }

  void add(const std::string& name, double value, double reference,
           double deviation, double tolerance) {
    const double tol = tolerance * tol_scale;
    const bool pass = deviation <= tol;
    all_passed &= pass;
    table.add_row({value, reference, deviation, tol, pass ? 1.0 : 0.0}, name);
  }
  void info(const std::string& name, double value) {
    table.add_row({value, std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::quiet_NaN(), 1.0},
                  name, "informational");
  }
};

double norm_balance_defect(const qdyn::Trajectory& traj,
                           const std::vector<std::pair<qdyn::Matrix, double>>&
                               jumps) {
  std::span<const double> ts(traj.times.data(), size_t(traj.times.size()));
  double total = 0;
  for (const auto& [op, rate] : jumps) {
    if (rate <= 0) continue;
    qdyn::PdfSamples s = qdyn::jump_pdf(traj, op, rate);
    total += qdyn::trapezoid(ts, {s.w.data(), size_t(s.w.size())});
  }
  const double lhs = 1.0 - traj.states.col(traj.steps()).squaredNorm();
  return std::abs(lhs - total);
}

DeviceParams validation_device() {
  DeviceParams p;
  p.omega_a = two_pi * 197.5e12;
  p.omega_m = two_pi * 5.34e9;
  p.omega_sigma = p.omega_m;
  p.delta_pump = p.omega_m;
  p.g_om = two_pi * 2e5;
  p.pump_alpha = std::sqrt(1000.0);
  p.g_sm = two_pi * 41e6;
  p.q_opt = 3.6e4;
  p.q_mech = 1e6;
  p.temperature = 40;
  p.pulse_t = 2.9010521272446745e-11;
  return p;
}

}  // namespace

ValidationResult run_validation(const ValidationOptions& opts) {
  ValidationSink sink;
  sink.tol_scale = opts.tolerance_scale;

  // analytic two-mode squeezing coefficients: lossless quadratic identity
  {
    const double g = two_pi * 1e6, t = 0.7 / g;
    const auto c = herald::tms_coefficients(g, 0.0, t);
    const double dev = std::abs(c.c_b * c.c_b - std::norm(c.d_a) - 1.0);
    sink.add("tms_coefficient_identity", c.c_b * c.c_b - std::norm(c.d_a), 1.0,
             dev, 1e-12);
  }

  // leaked-photon flux: closed form against the dense Lindblad solver in the
  // truncation-converged window
  {
    const double g = two_pi * 1e6, gamma_e = two_pi * 5e6;
    qdyn::HilbertSpace space({12, 12, false});
    const qdyn::Matrix& a = space.photon_lower();
    const qdyn::Matrix& b = space.phonon_lower();
    qdyn::Matrix m = g * (a * b);
    qdyn::Matrix h = m + m.adjoint();
    qdyn::Matrix na = a.adjoint() * a;
    qdyn::Vector psi0 = space.vacuum();
    qdyn::Matrix rho = psi0 * psi0.adjoint();
    double t = 0, max_dev = 0, max_val = 0;
    const int samples = 10;
    const double t_end = 0.15e-6;
    for (int k = 1; k <= samples; ++k) {
      const double t_next = t_end * k / samples;
      rho = qdyn::lindblad_evolve(rho, h, {{a, gamma_e}}, t_next - t);
      t = t_next;
      const double numeric = gamma_e * (na * rho).trace().real();
      const double closed = herald::tms_leakage_expectation(g, gamma_e, t);
      max_dev = std::max(max_dev, std::abs(numeric - closed));
      max_val = std::max(max_val, closed);
    }
    sink.add("tms_leakage_vs_lindblad", max_dev, 0.0, max_dev / max_val, 1e-3);
  }

  // norm balance on pumped stochastic trajectories
  {
    DeviceParams p = validation_device();
    qdyn::HilbertSpace space({6, 6, false});
    const double n_th =
        thermo::thermal_occupation(p.temperature, p.omega_m);
    thermo::RateSet rates = thermo::decay_rates(p, n_th);
    const std::vector<std::pair<qdyn::Matrix, double>> jumps = {
        {space.photon_lower(), rates.gamma_a},
        {space.phonon_lower(), rates.gamma_b},
        {space.phonon_lower().adjoint(), rates.gamma_b_dag}};
    for (double factor : {1.0, 10.0}) {
      p.pulse_t = factor * rates.t_a;
      qdyn::Matrix h =
          qdyn::build_stochastic_hamiltonian(p, space, rates.jump_rates());
      qdyn::Trajectory traj = qdyn::evolve(space.vacuum(), h, p.pulse_t);
      const double defect = norm_balance_defect(traj, jumps);
      sink.add(factor == 1.0 ? "norm_balance_pulse_ta"
                             : "norm_balance_pulse_10ta",
               defect, 0.0, defect, 1e-8);
    }
  }

  // squeezed-state Fock amplitudes: vacuum exactness and agreement with the
  // truncated-Fock evolution
  {
    sink.add("fock_vacuum_n0",
             herald::tms_fock_amplitude(two_pi * 1e6, two_pi * 5e6, 0, 0)
                 .real(),
             1.0,
             std::abs(herald::tms_fock_amplitude(two_pi * 1e6, two_pi * 5e6, 0,
                                                 0) -
                      herald::Complex(1, 0)),
             0.0);
    double tail = 0;
    for (int n = 1; n <= 5; ++n)
      tail += std::abs(
          herald::tms_fock_amplitude(two_pi * 1e6, two_pi * 5e6, 0, n));
    sink.add("fock_vacuum_excited_tail", tail, 0.0, tail, 0.0);

    const double g = two_pi * 1e6, r = 0.3, t = r / g;
    qdyn::HilbertSpace space({16, 16, false});
    const qdyn::Matrix& a = space.photon_lower();
    const qdyn::Matrix& b = space.phonon_lower();
    qdyn::Matrix m = g * (a * b);
    qdyn::Matrix h = m + m.adjoint();
    qdyn::Trajectory traj = qdyn::evolve(space.vacuum(), h, t);
    const qdyn::Vector psi = traj.states.col(traj.steps());
    double max_rel = 0, single_cross_dev = 0;
    for (int n = 0; n <= 4; ++n) {
      const double p_evolved = std::norm(psi(space.index(n, n)));
      const double p_formula = std::norm(herald::tms_fock_amplitude(g, 0, t, n));
      max_rel = std::max(max_rel,
                         std::abs(p_formula - p_evolved) / p_evolved);
      const double p_single = std::norm(herald::tms_fock_amplitude(
          g, 0, t, n, herald::FockFormulaVariant::single_cross_term));
      if (n > 0)
        single_cross_dev = std::max(
            single_cross_dev, std::abs(p_single - p_evolved) / p_evolved);
    }
    sink.add("fock_vs_evolution", max_rel, 0.0, max_rel, 1e-3);
    sink.info("fock_single_cross_term_deviation", single_cross_dev);
    sink.add("norm_balance_tms_trajectory",
             std::abs(1.0 - psi.squaredNorm()), 0.0,
             std::abs(1.0 - psi.squaredNorm()), 1e-8);
  }

  // perturbative closed form against the trajectory engine, long pulse
  {
    DeviceParams p = validation_device();
    p.temperature = 0;
    qdyn::HilbertSpace space({6, 6, false});
    thermo::RateSet rates = thermo::decay_rates(p, 0.0);
    p.pulse_t = 2000 * rates.t_a;
    double dev_full = 0;
    double prev = 0;
    bool direction_ok = true;
    for (double alpha_sq : {1000.0, 250.0}) {
      p.pump_alpha = std::sqrt(alpha_sq);
      qdyn::Matrix h =
          qdyn::build_stochastic_hamiltonian(p, space, rates.jump_rates());
      qdyn::Trajectory traj = qdyn::evolve(space.vacuum(), h, p.pulse_t);
      qdyn::PdfSamples pa =
          qdyn::jump_pdf(traj, space.photon_lower(), rates.gamma_a);
      std::span<const double> ts(traj.times.data(),
                                 size_t(traj.times.size()));
      const double p_traj =
          qdyn::trapezoid(ts, {pa.pdf.data(), size_t(pa.pdf.size())});
      const double p_closed =
          herald::herald_probability(alpha_sq, p.g_om, rates.t_a, p.pulse_t)
              .value;
      const double dev = std::abs(p_traj / p_closed - 1.0);
      if (alpha_sq == 1000.0) {
        dev_full = dev;
        prev = dev;
      } else {
        direction_ok = dev < prev;
      }
      const double defect = norm_balance_defect(
          traj, {{space.photon_lower(), rates.gamma_a},
                 {space.phonon_lower(), rates.gamma_b}});
      sink.add(alpha_sq == 1000.0 ? "norm_balance_perturbative_full"
                                  : "norm_balance_perturbative_quarter",
               defect, 0.0, defect, 1e-8);
    }
    sink.add("perturbative_pa_long_pulse", dev_full, 0.0, dev_full, 0.02);
    sink.add("perturbative_pa_alpha_direction", direction_ok ? 1.0 : 0.0, 1.0,
             direction_ok ? 0.0 : 1.0, 0.5);
  }

  ValidationResult out{std::move(sink.table), sink.all_passed};
  out.table.set_metadata("all_passed", out.all_passed ? "true" : "false");
  return out;
}

}  // namespace spinomech::cli
