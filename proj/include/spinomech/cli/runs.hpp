#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinomech/cli/table.hpp"
#include "spinomech/device.hpp"
#include "spinomech/modefields/couplings.hpp"
#include "spinomech/modefields/geometry.hpp"
#include "spinomech/qdyn/branches.hpp"
#include "spinomech/thermo/material.hpp"
#include "spinomech/thermo/rates.hpp"

namespace spinomech::cli {

// One sweep axis: a device parameter name and its values. Valid names:
//   temperature, pump_alpha_sq, pump_alpha, pulse_t, pulse_t_over_ta,
//   g_om_hz, g_sm_hz, q_opt, q_mech, omega_m_hz
// pulse_t_over_ta is resolved after the optical rates of the grid point are
// known. Axes combine as a cartesian product, first axis slowest.
struct AxisSpec {
  std::string name;
  std::vector<double> values;
};

void validate_axes(const std::vector<AxisSpec>& axes);

enum class SweepEngine { closed_form, trajectory, both };

struct HeraldSweepSpec {
  DeviceParams base;
  std::vector<AxisSpec> axes;
  thermo::OccupationModel occupation = thermo::OccupationModel::linear;
  SweepEngine engine = SweepEngine::closed_form;
  // mechanical quality factor source: fixed device value or the combined
  // loss model evaluated on a material table
  bool q_from_material = false;
  std::optional<thermo::MaterialProperties> material;
  double q_clamp = 1e7;
  qdyn::HilbertConfig hilbert{6, 6, false};
  qdyn::BranchOptions branch;
  int jobs = 1;
};

ResultTable run_herald_sweep(const HeraldSweepSpec& spec);

struct QTemperatureSpec {
  std::vector<double> temperatures;
  double omega_m = 0;
  thermo::MaterialProperties material;
  double q_clamp = 1e7;
};

ResultTable run_q_temperature(const QTemperatureSpec& spec);

struct ValidationOptions {
  // scales every pass tolerance; the corrupted-tolerance test mode shrinks
  // them to force failures
  double tolerance_scale = 1.0;
};

struct ValidationResult {
  ResultTable table;
  bool all_passed = false;
};

// Cross-oracle suite: analytic two-mode squeezing against the dense Lindblad
// solver, norm balance on the stochastic trajectories, squeezed-state Fock
// amplitudes against truncated-Fock evolution, and the perturbative
// heralding probability against the trajectory engine.
ValidationResult run_validation(const ValidationOptions& opts = {});

struct CouplingsSpec {
  std::string volume_path;
  std::optional<std::string> surface_path;
  std::vector<double> alphas;  // rad
  modefields::CrystalOrientation orientation;  // theta/phi used, alpha swept
  modefields::PhotoelasticConstants photoelastic =
      modefields::diamond_photoelastic();
  modefields::BulkMaterial bulk;
  double strain_susceptibility = 0;  // rad/s per unit strain
};

ResultTable run_couplings(const CouplingsSpec& spec);

struct GeometrySpec {
  modefields::TaperParams taper;
  std::string polyline_path;
  std::string schedule_path;
};

void run_geometry(const GeometrySpec& spec);

}  // namespace spinomech::cli
