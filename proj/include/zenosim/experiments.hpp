#pragma once

// Named scenarios that regenerate every figure dataset, plus the searches
// behind the in-text numbers (optimal epsilon, minimal interaction time, the
// Zeno baseline comparison and the cesium parameter check).
//
// Files written to out_dir for scenario <id>:
//   <id>_trajectory.csv  t_over_tf,<state labels>         population figures
//   <id>_surface.csv     <outer>,<inner>,fidelity         fig3d, fig7a, fig7b
//   <id>_curves.csv      <decay axis>,<one column/series> fig6a, fig6b
//   fig4a_pulses.csv     t_over_tf,Omega1,Omega2          pulses in units of lambda
//   <id>_summary.txt     key=value, every effective parameter plus results

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zenosim/csv.hpp"
#include "zenosim/models.hpp"
#include "zenosim/sweep.hpp"

namespace zenosim {

struct ScenarioOptions {
  std::filesystem::path out_dir = ".";
  int steps = 20000;
  int store_every = 100;
  bool force = false;
  bool parallel = true;
  // Overrides of the scenario defaults.
  std::optional<double> epsilon;
  std::optional<double> lambda_tf;
  std::optional<double> kappa;
  std::optional<double> gamma;
  std::vector<Axis> grids;  // replaces the default axis with the same name

  void validate() const;
};

struct ScenarioResult {
  std::string id;
  SummaryEntries summary;
  std::vector<std::filesystem::path> files;

  bool has(std::string_view key) const;
  /// Throws ParameterError for a missing key.
  const std::string& value(std::string_view key) const;
  double number(std::string_view key) const;
};

const std::vector<std::string>& scenario_ids();
/// The ids whose output is a plottable figure dataset (all except zeno-compare and cesium).
const std::vector<std::string>& figure_ids();

/// Throws ParameterError for an unknown id, OutputError when files cannot be written.
ScenarioResult run_scenario(std::string_view id, const ScenarioOptions& options);

struct OptimalEpsilon {
  double epsilon = 0.0;
  double fidelity = 0.0;
  int evaluations = 0;
};

/// Maximizes the closed-system fidelity over epsilon in [0.02, pi/6]: a coarse
/// scan brackets the best sample, golden-section search refines it to `tol`.
OptimalEpsilon optimal_epsilon(ModelKind kind, double lambda_tf, int steps = 20000, double tol = 1e-4);

struct MinimalTime {
  double lambda_tf = 0.0;  // NaN if no grid point reaches the threshold
  double epsilon = 0.0;
  double fidelity = 0.0;
};

/// Smallest lambda_tf at which the epsilon-optimized fidelity reaches
/// `threshold`. Scans `grid` (ascending) and bisects the first crossing to `tol`.
MinimalTime minimal_interaction_time(ModelKind kind, double threshold, const std::vector<double>& grid,
                                     int steps = 20000, double tol = 1e-3);

struct ZenoComparison {
  double omega_z = 0.1;
  double baseline_lambda_tf = 0.0;
  double baseline_max_phi1 = 0.0;  // numeric trajectory
  double baseline_max_phi1_analytic = 0.0;
  double baseline_final_fidelity = 0.0;
  double shortcut_epsilon = 0.2636;
  double shortcut_lambda_tf = 10.0;
  double shortcut_max_phi1 = 0.0;
  double shortcut_final_fidelity = 0.0;
  MinimalTime shortcut_minimal;
};

ZenoComparison zeno_compare(int steps = 20000, int store_every = 100);

struct CesiumCheck {
  double kappa = 0.0;
  double gamma = 0.0;
  double fidelity = 0.0;
  double closed_fidelity = 0.0;
  std::array<double, 3> kappa_scaled{};  // kappa x1, x2, x4 at fixed gamma
};

/// (lambda, kappa, Gamma) / 2pi = (750, 3.5, 2.62) MHz at epsilon 0.2636, lambda t_f = 10.
CesiumCheck cesium_check(int steps = 20000);

}  // namespace zenosim
