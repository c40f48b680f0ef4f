// Batch front-end: parameter sweeps, the analytic-vs-numeric validation
// suite, coupling computation from field exports, and taper geometry
// emission. Exit codes: 0 success, 1 validation failure, 2 input error.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "spinomech/cli/config.hpp"
#include "spinomech/cli/runs.hpp"
#include "spinomech/cli/svg.hpp"
#include "spinomech/constants.hpp"

namespace fs = std::filesystem;
using namespace spinomech;
using cli::Config;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  int jobs = 1;
  double tolerance = 1e-6;
  bool stamp = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
  auto* c = cmd->add_option("--config", opts.config_path, "configuration file");
  if (needs_config) c->required();
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--format", opts.format, "csv | json | svg+csv")
      ->check(CLI::IsMember({"csv", "json", "svg+csv"}));
  cmd->add_option("--jobs", opts.jobs, "parallel grid workers");
  cmd->add_option("--tolerance", opts.tolerance,
                  "relative accuracy target of the trajectory engine");
  cmd->add_flag("--stamp", opts.stamp,
                "record wall-clock time in output metadata (breaks "
                "byte-reproducibility)");
}

std::string timestamp(const CommonOpts& opts) {
  if (!opts.stamp) return "n/a";
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

void write_outputs(cli::ResultTable& table, const CommonOpts& opts,
                   const std::string& basename,
                   const std::optional<Config>& cfg) {
  table.set_metadata("timestamp", timestamp(opts));
  if (cfg) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  (unsigned long long)cli::fnv1a64(cfg->source_text()));
    table.set_metadata("config_hash", buf);
  }
  fs::create_directories(opts.out_dir);
  const std::string stem = opts.out_dir + "/" + basename;
  if (opts.format == "json") {
    std::ofstream out(stem + ".json");
    table.write_json(out);
  } else {
    std::ofstream out(stem + ".csv");
    table.write_csv(out);
  }
}

// ---- axis grammar: values = [...] or from/to/points/scale ----

std::vector<double> axis_values(const Config& cfg, const std::string& section) {
  cfg.require_known(section, {"values", "from", "to", "points", "scale"});
  if (cfg.has(section, "values")) return cfg.numbers(section, "values");
  const double from = cfg.number(section, "from");
  const double to = cfg.number(section, "to");
  const int points = int(cfg.number(section, "points"));
  const std::string scale = cfg.str_or(section, "scale", "linear");
  if (points < 1)
    throw std::runtime_error(section + ": points must be >= 1");
  std::vector<double> out;
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : double(i) / (points - 1);
    if (scale == "log")
      out.push_back(from * std::pow(to / from, f));
    else
      out.push_back(from + (to - from) * f);
  }
  return out;
}

std::vector<cli::AxisSpec> parse_axes(const Config& cfg) {
  std::vector<cli::AxisSpec> axes;
  for (const auto& section : cfg.sections_with_prefix("axis.")) {
    cli::AxisSpec ax;
    ax.name = section.substr(5);
    ax.values = axis_values(cfg, section);
    axes.push_back(std::move(ax));
  }
  return axes;
}

DeviceParams parse_device(const Config& cfg) {
  cfg.require_known(
      "device", {"omega_a_hz", "omega_m_hz", "omega_sigma_hz", "delta_pump_hz",
                 "g_om_hz", "g_sm_hz", "pump_alpha", "pump_alpha_sq", "q_opt",
                 "q_mech", "temperature_k", "pulse_t_s", "pulse_t_over_ta"});
  DeviceParams p;
  p.omega_a = two_pi * cfg.number("device", "omega_a_hz");
  p.omega_m = two_pi * cfg.number("device", "omega_m_hz");
  p.omega_sigma =
      two_pi * cfg.number_or("device", "omega_sigma_hz",
                             cfg.number("device", "omega_m_hz"));
  p.delta_pump =
      two_pi * cfg.number_or("device", "delta_pump_hz",
                             cfg.number("device", "omega_m_hz"));
  p.g_om = two_pi * cfg.number("device", "g_om_hz");
  p.g_sm = two_pi * cfg.number_or("device", "g_sm_hz", 0.0);
  if (cfg.has("device", "pump_alpha_sq"))
    p.pump_alpha = std::sqrt(cfg.number("device", "pump_alpha_sq"));
  else
    p.pump_alpha = cfg.number_or("device", "pump_alpha", 0.0);
  p.q_opt = cfg.number("device", "q_opt");
  p.q_mech = cfg.number_or("device", "q_mech", 1e6);
  p.temperature = cfg.number_or("device", "temperature_k", 0.0);
  if (cfg.has("device", "pulse_t_s"))
    p.pulse_t = cfg.number("device", "pulse_t_s");
  else
    p.pulse_t = cfg.number_or("device", "pulse_t_over_ta", 1.0) * p.q_opt /
                p.omega_a;
  return p;
}

int cmd_herald_sweep(const CommonOpts& opts) {
  Config cfg = Config::parse_file(opts.config_path);
  cli::HeraldSweepSpec spec;
  spec.base = parse_device(cfg);
  spec.axes = parse_axes(cfg);
  cli::validate_axes(spec.axes);

  cfg.require_known("sweep", {"engine", "occupation"});
  const std::string engine = cfg.str_or("sweep", "engine", "closed-form");
  if (engine == "closed-form")
    spec.engine = cli::SweepEngine::closed_form;
  else if (engine == "trajectory")
    spec.engine = cli::SweepEngine::trajectory;
  else if (engine == "both")
    spec.engine = cli::SweepEngine::both;
  else
    throw std::runtime_error("unknown engine `" + engine + "`");
  const std::string occ = cfg.str_or("sweep", "occupation", "linear");
  if (occ == "linear")
    spec.occupation = thermo::OccupationModel::linear;
  else if (occ == "bose")
    spec.occupation = thermo::OccupationModel::bose;
  else
    throw std::runtime_error("unknown occupation model `" + occ + "`");

  cfg.require_known("mechanical_q", {"model", "material", "q_clamp"});
  if (cfg.str_or("mechanical_q", "model", "fixed") == "material") {
    spec.q_from_material = true;
    spec.material =
        thermo::load_material_table(cfg.str("mechanical_q", "material"));
    spec.q_clamp = cfg.number_or("mechanical_q", "q_clamp", 1e7);
  }
  spec.branch.evolve.tol = opts.tolerance;
  spec.jobs = opts.jobs;

  cli::ResultTable table = cli::run_herald_sweep(spec);
  write_outputs(table, opts, "herald_sweep", cfg);

  if (opts.format == "svg+csv" && !spec.axes.empty()) {
    // series grouped over the slow axes, x = fastest axis
    const auto& fast = spec.axes.back();
    const size_t nfast = fast.values.size();
    for (const char* quantity : {"p_closed", "one_minus_f"}) {
      cli::LineChart chart;
      chart.title = std::string("herald sweep: ") + quantity;
      chart.x_label = fast.name;
      chart.y_label = quantity;
      chart.log_x = fast.values.front() > 0 &&
                    fast.values.back() / fast.values.front() > 10;
      chart.log_y = true;
      for (size_t start = 0; start + nfast <= table.rows();
           start += nfast) {
        cli::LineSeries s;
        s.name = "row " + std::to_string(start / nfast);
        for (size_t i = 0; i < nfast; ++i) {
          s.x.push_back(fast.values[i]);
          s.y.push_back(table.at(start + i, quantity));
        }
        chart.series.push_back(std::move(s));
      }
      cli::write_svg_chart(
          opts.out_dir + "/herald_sweep_" + quantity + ".svg", chart);
    }
  }
  return 0;
}

int cmd_q_temp(const CommonOpts& opts) {
  Config cfg = Config::parse_file(opts.config_path);
  cli::QTemperatureSpec spec;
  spec.temperatures = axis_values(cfg, "axis.temperature");
  cfg.require_known("device", {"omega_m_hz"});
  spec.omega_m = two_pi * cfg.number("device", "omega_m_hz");
  cfg.require_known("material", {"file", "q_clamp"});
  spec.material = thermo::load_material_table(cfg.str("material", "file"));
  spec.q_clamp = cfg.number_or("material", "q_clamp", 1e7);

  cli::ResultTable table = cli::run_q_temperature(spec);
  write_outputs(table, opts, "q_temp", cfg);

  if (opts.format == "svg+csv") {
    cli::LineChart chart;
    chart.title = "mechanical quality factor vs temperature";
    chart.x_label = "temperature [K]";
    chart.y_label = "Q";
    chart.log_x = true;
    chart.log_y = true;
    for (const char* col :
         {"q_clamp", "q_akhiezer", "q_landau_rumer", "q_total"}) {
      cli::LineSeries s;
      s.name = col;
      for (size_t r = 0; r < table.rows(); ++r) {
        s.x.push_back(table.at(r, "temperature"));
        s.y.push_back(table.at(r, col));
      }
      chart.series.push_back(std::move(s));
    }
    cli::write_svg_chart(opts.out_dir + "/q_temp.svg", chart);
  }
  return 0;
}

int cmd_validate(const CommonOpts& opts, bool corrupt) {
  cli::ValidationOptions vopts;
  if (corrupt) vopts.tolerance_scale = 1e-6;
  cli::ValidationResult res = cli::run_validation(vopts);
  write_outputs(res.table, opts, "validate", std::nullopt);
  for (size_t r = 0; r < res.table.rows(); ++r)
    std::printf("[%s] %s: value %.6g, tolerance %.3g\n",
                res.table.at(r, "pass") > 0 ? "PASS" : "FAIL",
                res.table.label(r).c_str(), res.table.at(r, "value"),
                res.table.at(r, "tolerance"));
  std::printf("validation %s\n", res.all_passed ? "passed" : "FAILED");
  return res.all_passed ? 0 : 1;
}

int cmd_couplings(const CommonOpts& opts) {
  Config cfg = Config::parse_file(opts.config_path);
  cli::CouplingsSpec spec;
  cfg.require_known("fields", {"volume", "surface"});
  spec.volume_path = cfg.str("fields", "volume");
  if (cfg.has("fields", "surface"))
    spec.surface_path = cfg.str("fields", "surface");
  spec.alphas = axis_values(cfg, "axis.alpha");
  cfg.require_known("orientation", {"theta", "phi"});
  if (cfg.has("orientation", "theta"))
    spec.orientation.theta = cfg.number("orientation", "theta");
  if (cfg.has("orientation", "phi"))
    spec.orientation.phi = cfg.number("orientation", "phi");
  cfg.require_known("photoelastic", {"p11", "p12", "p44"});
  if (cfg.has_section("photoelastic")) {
    spec.photoelastic.p11 = cfg.number("photoelastic", "p11");
    spec.photoelastic.p12 = cfg.number("photoelastic", "p12");
    spec.photoelastic.p44 = cfg.number("photoelastic", "p44");
  }
  cfg.require_known("material",
                    {"refractive_index", "strain_susceptibility_hz",
                     "youngs_modulus", "poisson_ratio", "v_p", "v_s"});
  spec.bulk.refractive_index =
      cfg.number_or("material", "refractive_index", 2.417);
  spec.bulk.youngs_modulus =
      cfg.number_or("material", "youngs_modulus", 1050e9);
  spec.bulk.poisson_ratio = cfg.number_or("material", "poisson_ratio", 0.1);
  spec.bulk.v_p = cfg.number_or("material", "v_p", 17500.0);
  spec.bulk.v_s = cfg.number_or("material", "v_s", 12000.0);
  spec.strain_susceptibility =
      two_pi * cfg.number_or("material", "strain_susceptibility_hz", 1e15);

  cli::ResultTable table = cli::run_couplings(spec);
  write_outputs(table, opts, "couplings", cfg);

  if (opts.format == "svg+csv") {
    cli::LineChart chart;
    chart.title = "couplings vs crystal angle";
    chart.x_label = "alpha [rad]";
    chart.y_label = "coupling [rad/s]";
    for (const char* col : {"g_pe", "g_mb", "g_om", "gsm_max"}) {
      cli::LineSeries s;
      s.name = col;
      for (size_t r = 0; r < table.rows(); ++r) {
        s.x.push_back(table.at(r, "alpha"));
        s.y.push_back(table.at(r, col));
      }
      chart.series.push_back(std::move(s));
    }
    cli::write_svg_chart(opts.out_dir + "/couplings.svg", chart);
  }
  return 0;
}

int cmd_geometry(const CommonOpts& opts) {
  Config cfg = Config::parse_file(opts.config_path);
  cfg.require_known(
      "taper", {"bridge_width_nm", "defect_period_nm", "defect_height_nm",
                "defect_ellipse_x_nm", "mirror_period_nm",
                "mirror_ellipse_x_nm", "mirror_ellipse_y_nm", "n_cells",
                "samples_per_side"});
  cli::GeometrySpec spec;
  const double nm = 1e-9;
  spec.taper.bridge_width = nm * cfg.number("taper", "bridge_width_nm");
  spec.taper.defect_period = nm * cfg.number("taper", "defect_period_nm");
  spec.taper.defect_height = nm * cfg.number("taper", "defect_height_nm");
  spec.taper.defect_ellipse_x =
      nm * cfg.number("taper", "defect_ellipse_x_nm");
  spec.taper.mirror_period = nm * cfg.number("taper", "mirror_period_nm");
  spec.taper.mirror_ellipse_x =
      nm * cfg.number("taper", "mirror_ellipse_x_nm");
  spec.taper.mirror_ellipse_y =
      nm * cfg.number("taper", "mirror_ellipse_y_nm");
  spec.taper.n_cells = int(cfg.number_or("taper", "n_cells", 8));
  spec.taper.samples_per_side =
      int(cfg.number_or("taper", "samples_per_side", 64));
  fs::create_directories(opts.out_dir);
  spec.polyline_path = opts.out_dir + "/taper_polyline.csv";
  spec.schedule_path = opts.out_dir + "/cell_schedule.csv";
  cli::run_geometry(spec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-optomechanical interface simulator"};
  app.require_subcommand(1);

  CommonOpts herald_opts, qtemp_opts, validate_opts, couplings_opts,
      geometry_opts;
  bool corrupt = false;

  auto* herald = app.add_subcommand(
      "herald-sweep", "heralding probability / infidelity parameter sweep");
  add_common(herald, herald_opts, true);
  auto* qtemp = app.add_subcommand(
      "q-temp", "mechanical quality factor vs temperature");
  add_common(qtemp, qtemp_opts, true);
  auto* validate =
      app.add_subcommand("validate", "run the cross-oracle validation suite");
  add_common(validate, validate_opts, false);
  validate->add_flag("--corrupt-tolerances", corrupt,
                     "shrink tolerances to force failures (self-test)");
  auto* couplings = app.add_subcommand(
      "couplings", "coupling rates from mode field exports");
  add_common(couplings, couplings_opts, true);
  auto* geometry =
      app.add_subcommand("geometry", "emit taper polyline and cell schedule");
  add_common(geometry, geometry_opts, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (herald->parsed()) return cmd_herald_sweep(herald_opts);
    if (qtemp->parsed()) return cmd_q_temp(qtemp_opts);
    if (validate->parsed()) return cmd_validate(validate_opts, corrupt);
    if (couplings->parsed()) return cmd_couplings(couplings_opts);
    if (geometry->parsed()) return cmd_geometry(geometry_opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
