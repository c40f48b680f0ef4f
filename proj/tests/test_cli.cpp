#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "spinomech/cli/config.hpp"
#include "spinomech/cli/runs.hpp"
#include "spinomech/cli/table.hpp"
#include "spinomech/constants.hpp"
#include "spinomech/thermo/material.hpp"
#include "support/fixtures.hpp"

using namespace spinomech;
using namespace spinomech::cli;

namespace {

DeviceParams reference_device() {
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

TEST_CASE("config parser") {
  SUBCASE("scalars, strings, booleans and arrays") {
    Config cfg = Config::parse_string(
        "# comment\n"
        "[device]\n"
        "omega = 5.34e9   # trailing comment\n"
        "name = \"diamond # not a comment\"\n"
        "enabled = true\n"
        "[axis.t]\n"
        "values = [1, 2.5, 1e2]\n"
        "labels = [\"a\", \"b\"]\n");
    CHECK(cfg.number("device", "omega") == doctest::Approx(5.34e9));
    CHECK(cfg.str("device", "name") == "diamond # not a comment");
    CHECK(cfg.boolean_or("device", "enabled", false));
    CHECK(cfg.numbers("axis.t", "values") ==
          std::vector<double>{1.0, 2.5, 100.0});
    CHECK(cfg.at("axis.t", "labels").string_array("t") ==
          std::vector<std::string>{"a", "b"});
  }
  SUBCASE("axis sections keep their declaration order") {
    Config cfg = Config::parse_string(
        "[axis.temperature]\nvalues = [1]\n"
        "[axis.alpha]\nvalues = [2]\n"
        "[other]\nx = 1\n");
    CHECK(cfg.sections_with_prefix("axis.") ==
          std::vector<std::string>{"axis.temperature", "axis.alpha"});
  }
  SUBCASE("unknown keys are rejected") {
    Config cfg = Config::parse_string("[device]\nomega = 1\ntypo_key = 2\n");
    CHECK_THROWS_WITH_AS(cfg.require_known("device", {"omega"}),
                         doctest::Contains("typo_key"), std::runtime_error);
  }
  SUBCASE("syntax errors carry line numbers") {
    CHECK_THROWS_WITH_AS(Config::parse_string("[device]\nbroken line\n"),
                         doctest::Contains(":2:"), std::runtime_error);
    CHECK_THROWS_AS(Config::parse_string("key = 1\n"), std::runtime_error);
    CHECK_THROWS_AS(Config::parse_string("[s]\nk = [1, \"x\"]\n"),
                    std::runtime_error);
    CHECK_THROWS_AS(Config::parse_string("[s]\nk = 1\nk = 2\n"),
                    std::runtime_error);
  }
  SUBCASE("missing pieces produce contextual errors") {
    Config cfg = Config::parse_string("[a]\nx = 1\n");
    CHECK_THROWS_WITH_AS(cfg.number("a", "y"), doctest::Contains("missing key"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(cfg.number("b", "y"),
                         doctest::Contains("missing section"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(cfg.str("a", "x"), doctest::Contains("string"),
                         std::runtime_error);
  }
}

TEST_CASE("result table") {
  SUBCASE("CSV output is deterministic") {
    auto build = [] {
      ResultTable t("demo", {"a", "b"}, {"K", ""});
      t.set_metadata("config_hash", "deadbeef");
      t.add_row({1.0, 2.0});
      t.add_row({std::nan(""), 4.0}, "", "engine failure");
      std::ostringstream out;
      t.write_csv(out);
      return out.str();
    };
    CHECK(build() == build());
    CHECK(build().find("nan,4,engine failure") != std::string::npos);
  }
  SUBCASE("NaN without a reason is rejected") {
    ResultTable t("demo", {"a"}, {});
    CHECK_THROWS_AS(t.add_row({std::nan("")}), std::invalid_argument);
  }
  SUBCASE("fnv1a64 reference value") {
    CHECK(fnv1a64("spinomech") == 0xc69106cc174e8ddbull);
    CHECK(fnv1a64("") == 14695981039346656037ull);
  }
  SUBCASE("json output carries nulls for NaN") {
    ResultTable t("demo", {"a"}, {});
    t.add_row({std::nan("")}, "", "why");
    std::ostringstream out;
    t.write_json(out);
    CHECK(out.str().find("null") != std::string::npos);
  }
}

TEST_CASE("herald sweep") {
  HeraldSweepSpec spec;
  spec.base = reference_device();
  spec.q_from_material = true;
  spec.material = thermo::load_material_table(SPINOMECH_DATA_DIR "/diamond.mat");
  spec.q_clamp = 1e7;

  SUBCASE("reference point reproduces the closed forms") {
    spec.axes = {{"temperature", {40.0}},
                 {"pump_alpha_sq", {1000.0}},
                 {"pulse_t_over_ta", {1.0}}};
    ResultTable t = run_herald_sweep(spec);
    REQUIRE(t.rows() == 1);
    CHECK(t.at(0, "p_closed") == doctest::Approx(5.31607e-6).epsilon(1e-5));
    CHECK(t.at(0, "herald_rate") == doctest::Approx(1.83246e5).epsilon(1e-5));
    CHECK(t.at(0, "n_th") == doctest::Approx(156.0795).epsilon(1e-6));
    CHECK(t.at(0, "one_minus_f") < 0.10);
    CHECK(t.at(0, "p_valid") == 1.0);
    CHECK(t.at(0, "p_entangle") ==
          doctest::Approx(2 * t.at(0, "p_closed")).epsilon(1e-12));
  }
  SUBCASE("probability and infidelity increase monotonically with the pulse") {
    spec.axes = {{"pulse_t_over_ta", {}}};
    for (int i = 0; i < 12; ++i)
      spec.axes[0].values.push_back(std::pow(10.0, 3.0 * i / 11));
    ResultTable t = run_herald_sweep(spec);
    for (size_t r = 1; r < t.rows(); ++r) {
      CHECK(t.at(r, "p_closed") > t.at(r - 1, "p_closed"));
      CHECK(t.at(r, "one_minus_f") > t.at(r - 1, "one_minus_f"));
    }
  }
  SUBCASE("axis validation fires before any computation") {
    spec.axes = {{"temperature", {}}};
    CHECK_THROWS_WITH_AS(run_herald_sweep(spec), doctest::Contains("no values"),
                         std::invalid_argument);
    spec.axes = {{"not_a_parameter", {1.0}}};
    CHECK_THROWS_WITH_AS(run_herald_sweep(spec),
                         doctest::Contains("not_a_parameter"),
                         std::invalid_argument);
  }
  SUBCASE("a failing grid point is recorded and does not abort the sweep") {
    spec.axes = {{"temperature", {-5.0, 40.0}}};
    ResultTable t = run_herald_sweep(spec);
    REQUIRE(t.rows() == 2);
    CHECK(std::isnan(t.at(0, "p_closed")));
    CHECK(!t.reason(0).empty());
    CHECK(t.reason(1).empty());
    CHECK(t.at(1, "p_closed") > 0);
  }
  SUBCASE("grid order is row-major with the first axis slowest") {
    spec.axes = {{"temperature", {4.0, 40.0}},
                 {"pump_alpha_sq", {10.0, 1000.0}}};
    ResultTable t = run_herald_sweep(spec);
    REQUIRE(t.rows() == 4);
    CHECK(t.at(0, "temperature") == 4.0);
    CHECK(t.at(1, "temperature") == 4.0);
    CHECK(t.at(1, "pump_alpha_sq") == 1000.0);
    CHECK(t.at(2, "temperature") == 40.0);
  }
  SUBCASE("trajectory engine adds branch columns consistent with the pair "
          "oracle") {
    spec.engine = SweepEngine::both;
    spec.q_from_material = false;
    spec.base.temperature = 0;
    spec.base.q_mech = 1e9;
    spec.axes = {{"pulse_t_over_ta", {1.0}}};
    ResultTable t = run_herald_sweep(spec);
    REQUIRE(t.rows() == 1);
    // intracavity build-up suppresses the trajectory value below the
    // steady-state closed form at a one-lifetime pulse
    CHECK(t.at(0, "p_a_traj") == doctest::Approx(3.0962e-7).epsilon(0.02));
    CHECK(t.at(0, "p_total_traj") >= t.at(0, "p_a_traj"));
    CHECK(t.at(0, "f0_traj") > 0.99);
    CHECK(t.at(0, "fidelity_traj") <= 1.0);
  }
  SUBCASE("parallel execution matches the serial result") {
    spec.axes = {{"temperature", {4.0, 10.0, 20.0, 40.0}},
                 {"pulse_t_over_ta", {1.0, 10.0, 100.0}}};
    spec.jobs = 1;
    ResultTable serial = run_herald_sweep(spec);
    spec.jobs = 4;
    ResultTable parallel = run_herald_sweep(spec);
    REQUIRE(serial.rows() == parallel.rows());
    for (size_t r = 0; r < serial.rows(); ++r)
      CHECK(serial.at(r, "p_closed") == parallel.at(r, "p_closed"));
  }
}

TEST_CASE("q-temp run") {
  QTemperatureSpec spec;
  spec.omega_m = two_pi * 5.34e9;
  spec.material = thermo::load_material_table(SPINOMECH_DATA_DIR "/diamond.mat");
  spec.q_clamp = 1e7;
  for (int i = 0; i <= 40; ++i)
    spec.temperatures.push_back(4.0 * std::pow(75.0, i / 40.0));

  ResultTable t = run_q_temperature(spec);
  REQUIRE(t.rows() == 41);
  std::vector<std::string> seq;
  for (size_t r = 0; r < t.rows(); ++r) {
    CHECK(t.at(r, "q_total") <= t.at(r, "q_clamp") + 1e-9);
    CHECK(t.at(r, "q_total") <= t.at(r, "q_akhiezer") + 1e-9);
    CHECK(t.at(r, "q_total") <= t.at(r, "q_landau_rumer") + 1e-9);
    if (seq.empty() || seq.back() != t.label(r)) seq.push_back(t.label(r));
  }
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == "clamping");
  CHECK(seq[1] == "akhiezer");
  CHECK(seq[2] == "landau-rumer");

  SUBCASE("temperatures outside the tables are reported per row") {
    spec.temperatures = {1.0, 40.0};
    ResultTable bad = run_q_temperature(spec);
    CHECK(std::isnan(bad.at(0, "q_akhiezer")));
    CHECK(!bad.reason(0).empty());
    CHECK(bad.reason(1).empty());
  }
}

TEST_CASE("validation suite passes and the corrupted mode fails") {
  ValidationResult good = run_validation({});
  CHECK(good.all_passed);
  for (size_t r = 0; r < good.table.rows(); ++r)
    CHECK(good.table.at(r, "pass") == 1.0);

  ValidationResult bad = run_validation({1e-6});
  CHECK(!bad.all_passed);
}

TEST_CASE("couplings run on the bundled fixture") {
  CouplingsSpec spec;
  spec.volume_path = SPINOMECH_DATA_DIR "/fixtures/gaussian_volume.csv";
  spec.surface_path =
      std::string(SPINOMECH_DATA_DIR "/fixtures/gaussian_surface.csv");
  spec.alphas = {0.0, std::numbers::pi / 4, std::numbers::pi / 2};
  spec.strain_susceptibility = two_pi * 1e15;

  ResultTable t = run_couplings(spec);
  REQUIRE(t.rows() == 3);
  for (size_t r = 0; r < t.rows(); ++r) {
    CHECK(t.at(r, "g_om") == t.at(r, "g_pe") + t.at(r, "g_mb"));
    CHECK(std::abs(t.at(r, "gsm_max")) / two_pi > 1e6);
  }
  // quarter-turn symmetry of the photoelastic coupling
  CHECK(t.at(0, "g_pe") == doctest::Approx(t.at(2, "g_pe")).epsilon(1e-12));

  SUBCASE("zero strain zeroes both strain-driven couplings") {
    auto zero = testsupport::plane_wave_fixture(0.0, 1e-9, 8);
    modefields::write_volume_export("/tmp/spinomech_zero_vol.csv", zero);
    CouplingsSpec zspec = spec;
    zspec.volume_path = "/tmp/spinomech_zero_vol.csv";
    zspec.surface_path.reset();
    ResultTable zt = run_couplings(zspec);
    for (size_t r = 0; r < zt.rows(); ++r) {
      CHECK(zt.at(r, "g_pe") == 0.0);
      CHECK(zt.at(r, "gsm_max") == 0.0);
    }
  }
}
