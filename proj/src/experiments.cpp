#include "zenosim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zenosim/dynamics.hpp"
#include "zenosim/errors.hpp"
#include "zenosim/pulse.hpp"

namespace zenosim {

namespace fs = std::filesystem;

namespace {

constexpr double kEpsLo = 0.02;
constexpr double kEpsHi = std::numbers::pi / 6.0;
constexpr int kCoarseSamples = 25;
constexpr double kPerfect = 0.999;

const double kEpsN1 = std::asin(0.25);

class Summary {
public:
  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, double value) { add(std::move(key), format_number(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }
  SummaryEntries& entries() { return entries_; }

private:
  SummaryEntries entries_;
};

// ---- trajectory scenarios ----------------------------------------------------

enum class Source { Whole, Subsystem, Dark };

struct ColumnSpec {
  std::string label;
  Source source;
  std::string state;
};

struct TrajectorySpec {
  ModelKind kind;
  double epsilon;
  double lambda_tf;
  std::vector<ColumnSpec> columns;
};

std::vector<ColumnSpec> whole(std::initializer_list<const char*> states) {
  std::vector<ColumnSpec> out;
  for (const char* s : states) out.push_back({s, Source::Whole, s});
  return out;
}

std::vector<ColumnSpec> tagged(Source src, const char* suffix, std::initializer_list<const char*> states) {
  std::vector<ColumnSpec> out;
  for (const char* s : states) out.push_back({std::string(s) + suffix, src, s});
  return out;
}

std::vector<ColumnSpec> concat(std::vector<ColumnSpec> a, const std::vector<ColumnSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool trajectory_spec(std::string_view id, TrajectorySpec& spec) {
  using K = ModelKind;
  const auto sub = [](std::initializer_list<const char*> s) { return tagged(Source::Subsystem, "_sub", s); };
  const auto dark = [](std::initializer_list<const char*> s) { return tagged(Source::Dark, "_dark", s); };
  if (id == "fig2a")
    spec = {K::TwoAtom, kEpsN1, 50.0,
            concat(sub({"psi0", "phi1", "psi5"}), whole({"psi0", "psi5", "phi1", "phi2", "phi3"}))};
  else if (id == "fig2b")
    spec = {K::TwoAtom, std::asin(0.01), 300.0,
            concat(dark({"psi0", "phi2", "phi3", "psi5"}), whole({"psi0", "psi5", "phi1", "phi2", "phi3"}))};
  else if (id == "fig3a")
    spec = {K::TwoAtom, kEpsN1, 10.0, sub({"psi0", "phi1", "psi5"})};
  else if (id == "fig3b")
    spec = {K::TwoAtom, kEpsN1, 10.0, dark({"psi0", "phi2", "phi3", "psi5"})};
  else if (id == "fig3c")
    spec = {K::TwoAtom, kEpsN1, 10.0, whole({"psi0", "psi5", "phi1", "phi2", "phi3"})};
  else if (id == "fig4b")
    spec = {K::TwoAtom, 0.2636, 10.0, whole({"psi0", "psi2", "psi3", "psi4", "psi5"})};
  else if (id == "fig5a")
    spec = {K::TwoAtom, 0.2636, 10.0, whole({"phi1", "psi3", "mu2"})};
  else if (id == "fig5b")
    spec = {K::TwoAtom, 0.1196, 20.0, whole({"psi0", "psi2", "psi3", "psi4", "psi5"})};
  else if (id == "fig8a")
    spec = {K::ThreeAtom, 0.2596, 9.5, whole({"phi1", "phi2", "phi3", "phi4", "phi5", "phi6", "phi7"})};
  else if (id == "fig8b")
    spec = {K::ThreeAtom, 0.2596, 9.5,
            {{"Phi1", Source::Whole, "Phi1"},
             {"mu_plus", Source::Whole, "mu+"},
             {"mu_minus", Source::Whole, "mu-"},
             {"Phi4", Source::Whole, "Phi4"},
             {"Phi5", Source::Whole, "Phi5"}}};
  else
    return false;
  return true;
}

// Basis labels psi0 (= psi1), psi1..psi5 / phi1..phi7, or an analysis state.
Ket resolve_state(ModelKind kind, const std::string& label) {
  const BasisCatalog basis = basis_catalog(kind);
  if (kind == ModelKind::TwoAtom && label == "psi0") return Ket::basis(basis.dim, basis.initial_index);
  for (std::size_t i = 0; i < basis.labels.size(); ++i)
    if (basis.labels[i] == label) return Ket::basis(basis.dim, i);
  return analysis_state(kind, label);
}

std::size_t subsystem_index(const std::string& label) {
  if (label == "psi0") return 0;
  if (label == "phi1") return 1;
  if (label == "psi5") return 2;
  throw ParameterError("no subsystem state '" + label + "'");
}

RunParameters effective(ModelKind kind, double eps, double tf, const ScenarioOptions& o) {
  RunParameters p;
  p.model = kind;
  p.epsilon = o.epsilon.value_or(eps);
  p.lambda_tf = o.lambda_tf.value_or(tf);
  p.kappa = o.kappa.value_or(0.0);
  p.gamma = o.gamma.value_or(0.0);
  p.steps = o.steps;
  p.validate();
  return p;
}

void echo(Summary& s, std::string_view id, const RunParameters& p, const ScenarioOptions& o) {
  s.add("scenario", std::string(id));
  s.add("model", std::string(to_string(p.model)));
  s.add("lambda", 1.0);
  s.add("epsilon", p.epsilon);
  s.add("lambda_tf", p.lambda_tf);
  s.add("kappa_over_lambda", p.kappa);
  s.add("gamma_over_lambda", p.gamma);
  s.add("steps", p.steps);
  s.add("store_every", o.store_every);
}

void echo_axis(Summary& s, const std::string& prefix, const Axis& a) {
  s.add(prefix + "_axis", a.name);
  s.add(prefix + "_start", a.start);
  s.add(prefix + "_stop", a.stop);
  s.add(prefix + "_count", a.count);
}

Axis axis_or_override(const ScenarioOptions& o, Axis fallback) {
  for (const auto& a : o.grids)
    if (a.name == fallback.name) return a;
  return fallback;
}

std::vector<double> t_over_tf(const Trajectory& tr, double tf) {
  std::vector<double> x(tr.times.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = tr.times[i] / tf;
  return x;
}

ScenarioResult run_trajectory(std::string_view id, const TrajectorySpec& spec, const ScenarioOptions& o) {
  const RunParameters p = effective(spec.kind, spec.epsilon, spec.lambda_tf, o);
  const ModelSpec model = p.to_model();
  const IntegratorConfig cfg{o.steps, o.store_every};
  cfg.validate();

  const fs::path csv = o.out_dir / (std::string(id) + "_trajectory.csv");
  const fs::path summary_path = o.out_dir / (std::string(id) + "_summary.txt");
  ensure_writable(csv, o.force);
  ensure_writable(summary_path, o.force);

  const Trajectory tr = simulate(model, cfg);
  std::optional<Trajectory> sub;
  std::vector<Column> columns;
  for (const auto& c : spec.columns) {
    Column col{c.label, {}};
    switch (c.source) {
      case Source::Whole:
        col.values = tr.population_series(resolve_state(spec.kind, c.state));
        break;
      case Source::Subsystem:
        if (!sub) sub = integrate_schrodinger(subsystem_hamiltonian(model), Ket::basis(3, 0), p.lambda_tf, cfg);
        col.values = sub->population_series(Ket::basis(3, subsystem_index(c.state)));
        break;
      case Source::Dark: {
        const Ket target = resolve_state(spec.kind, c.state);
        for (double t : tr.times) col.values.push_back(std::norm(inner(target, dark_state(model, t))));
        break;
      }
    }
    columns.push_back(std::move(col));
  }
  write_trajectory_csv(csv, t_over_tf(tr, p.lambda_tf), columns, o.force);

  Summary s;
  echo(s, id, p, o);
  s.add("target", basis_catalog(spec.kind).labels[tr.target_index]);
  s.add("final_fidelity", tr.fidelity_final);
  s.add("max_drift", tr.max_drift);
  for (const auto& c : columns) {
    const auto it = std::max_element(c.values.begin(), c.values.end());
    s.add("max_" + c.label, *it);
    s.add("t_over_tf_at_max_" + c.label, tr.times[static_cast<std::size_t>(it - c.values.begin())] / p.lambda_tf);
    s.add("final_" + c.label, c.values.back());
  }
  write_summary(summary_path, s.entries(), o.force);
  return {std::string(id), s.entries(), {csv, summary_path}};
}

// ---- other figures -----------------------------------------------------------

ScenarioResult run_pulses(const ScenarioOptions& o) {
  const RunParameters p = effective(ModelKind::TwoAtom, 0.2636, 10.0, o);
  const ModelSpec model = p.to_model();
  const fs::path csv = o.out_dir / "fig4a_pulses.csv";
  const fs::path summary_path = o.out_dir / "fig4a_summary.txt";
  ensure_writable(csv, o.force);
  ensure_writable(summary_path, o.force);

  const int samples = std::max(1, o.steps / o.store_every);
  std::vector<double> x;
  Column w1{"Omega1", {}}, w2{"Omega2", {}};
  for (int i = 0; i <= samples; ++i) {
    const double u = static_cast<double>(i) / samples;
    const double t = u * p.lambda_tf;
    x.push_back(u);
    w1.values.push_back(model.omega1(t) / model.lambda);
    w2.values.push_back(model.omega2(t) / model.lambda);
  }
  write_trajectory_csv(csv, x, {w1, w2}, o.force);

  Summary s;
  echo(s, "fig4a", p, o);
  s.add("peak_omega_over_lambda", model.pulse.amplitude() / model.lambda);
  s.add("ratio_r", ratio_r(model.pulse.params(), model.lambda));
  write_summary(summary_path, s.entries(), o.force);
  return {"fig4a", s.entries(), {csv, summary_path}};
}

SweepResult run_sweep(const Axis& outer, const Axis& inner, const PointFn& f, bool parallel) {
  return parallel ? sweep_parallel(outer, inner, f) : sweep_serial(outer, inner, f);
}

ScenarioResult run_fig3d(const ScenarioOptions& o) {
  RunParameters base = effective(ModelKind::TwoAtom, 0.2636, 10.0, o);
  const Axis eps_axis = axis_or_override(o, {"epsilon", 0.05, 0.5, 46});
  const Axis tf_axis = axis_or_override(o, {"lambda_tf", 5.0, 20.0, 31});
  const fs::path csv = o.out_dir / "fig3d_surface.csv";
  const fs::path summary_path = o.out_dir / "fig3d_summary.txt";
  ensure_writable(csv, o.force);
  ensure_writable(summary_path, o.force);

  const SweepResult grid = run_sweep(eps_axis, tf_axis, point_evaluator(base, eps_axis.name, tf_axis.name), o.parallel);
  write_surface_csv(csv, grid, o.force);

  Summary s;
  echo(s, "fig3d", base, o);
  echo_axis(s, "outer", eps_axis);
  echo_axis(s, "inner", tf_axis);
  s.add("threshold", kPerfect);
  const GridArgmax best = grid.argmax();
  s.add("grid_max_fidelity", best.value);
  s.add("grid_argmax_epsilon", eps_axis.value(best.outer));
  s.add("grid_argmax_lambda_tf", tf_axis.value(best.inner));

  // Row closest to lambda t_f = 10.
  int j10 = 0;
  for (int j = 1; j < tf_axis.count; ++j)
    if (std::abs(tf_axis.value(j) - 10.0) < std::abs(tf_axis.value(j10) - 10.0)) j10 = j;
  int i10 = 0;
  for (int i = 1; i < eps_axis.count; ++i)
    if (grid.at(i, j10) > grid.at(i10, j10)) i10 = i;
  s.add("row_lambda_tf", tf_axis.value(j10));
  s.add("row_argmax_epsilon", eps_axis.value(i10));
  s.add("row_max_fidelity", grid.at(i10, j10));
  const OptimalEpsilon opt10 = optimal_epsilon(ModelKind::TwoAtom, tf_axis.value(j10), o.steps);
  s.add("optimal_epsilon", opt10.epsilon);
  s.add("optimal_fidelity", opt10.fidelity);

  double min_grid = std::numeric_limits<double>::quiet_NaN();
  for (int j = 0; j < tf_axis.count && std::isnan(min_grid); ++j)
    for (int i = 0; i < eps_axis.count; ++i)
      if (grid.at(i, j) >= kPerfect) {
        min_grid = tf_axis.value(j);
        break;
      }
  s.add("min_lambda_tf_grid", min_grid);
  const MinimalTime mt = minimal_interaction_time(ModelKind::TwoAtom, kPerfect, tf_axis.values(), o.steps);
  s.add("min_lambda_tf", mt.lambda_tf);
  s.add("min_lambda_tf_epsilon", mt.epsilon);
  s.add("min_lambda_tf_fidelity", mt.fidelity);

  const OptimalEpsilon opt64 = optimal_epsilon(ModelKind::TwoAtom, 6.4, o.steps);
  s.add("lambda_tf_6.4_optimal_epsilon", opt64.epsilon);
  s.add("lambda_tf_6.4_optimal_fidelity", opt64.fidelity);
  write_summary(summary_path, s.entries(), o.force);
  return {"fig3d", s.entries(), {csv, summary_path}};
}

struct Series {
  const char* label;
  double epsilon;
  double lambda_tf;
};

constexpr Series kFig6Series[] = {{"eps0.2636_tf10", 0.2636, 10.0},
                                  {"eps0.1196_tf20", 0.1196, 20.0},
                                  {"eps0.0810_tf40", 0.0810, 40.0}};

ScenarioResult run_fig6(std::string_view id, const char* decay_axis, const ScenarioOptions& o) {
  RunParameters base = effective(ModelKind::TwoAtom, 0.2636, 10.0, o);
  const Axis decay = axis_or_override(o, {decay_axis, 0.0, 0.1, 11});
  const Axis series{"series", 0.0, 2.0, 3};
  const fs::path csv = o.out_dir / (std::string(id) + "_curves.csv");
  const fs::path summary_path = o.out_dir / (std::string(id) + "_summary.txt");
  ensure_writable(csv, o.force);
  ensure_writable(summary_path, o.force);

  const std::string decay_name = decay.name;
  const PointFn f = [base, decay_name](double k, double rate) {
    const Series& sr = kFig6Series[static_cast<int>(std::lround(k))];
    RunParameters p = base;
    p.epsilon = sr.epsilon;
    p.lambda_tf = sr.lambda_tf;
    p.set(decay_name, rate);
    return final_fidelity(p.to_model(), p.steps);
  };
  const SweepResult grid = run_sweep(series, decay, f, o.parallel);

  std::vector<Column> columns;
  for (int k = 0; k < series.count; ++k) {
    Column c{kFig6Series[k].label, {}};
    for (int j = 0; j < decay.count; ++j) c.values.push_back(grid.at(k, j));
    columns.push_back(std::move(c));
  }
  write_columns_csv(csv, decay.name, decay.values(), columns, o.force);

  Summary s;
  echo(s, id, base, o);
  echo_axis(s, "decay", decay);
  for (int k = 0; k < series.count; ++k) {
    const Series& sr = kFig6Series[k];
    const auto& v = columns[static_cast<std::size_t>(k)].values;
    bool monotone = true;
    for (std::size_t j = 1; j < v.size(); ++j) monotone = monotone && v[j] <= v[j - 1] + 1e-6;
    const std::string tag = sr.label;
    s.add(tag + "_epsilon", sr.epsilon);
    s.add(tag + "_lambda_tf", sr.lambda_tf);
    s.add(tag + "_ratio_r", ratio_r(PulseParams::two_atom(sr.epsilon, sr.lambda_tf), 1.0));
    s.add(tag + "_fidelity_first", v.front());
    s.add(tag + "_fidelity_last", v.back());
    s.add(tag + "_monotone", monotone ? 1 : 0);
  }
  write_summary(summary_path, s.entries(), o.force);
  return {std::string(id), s.entries(), {csv, summary_path}};
}

ScenarioResult run_fig7(std::string_view id, ModelKind kind, double eps, double tf, const ScenarioOptions& o) {
  const RunParameters base = effective(kind, eps, tf, o);
  const Axis gamma = axis_or_override(o, {"gamma_over_lambda", 0.0, 0.1, 21});
  const Axis kappa = axis_or_override(o, {"kappa_over_lambda", 0.0, 0.1, 21});
  const fs::path csv = o.out_dir / (std::string(id) + "_surface.csv");
  const fs::path summary_path = o.out_dir / (std::string(id) + "_summary.txt");
  ensure_writable(csv, o.force);
  ensure_writable(summary_path, o.force);

  const SweepResult grid = run_sweep(gamma, kappa, point_evaluator(base, gamma.name, kappa.name), o.parallel);
  write_surface_csv(csv, grid, o.force);

  Summary s;
  echo(s, id, base, o);
  echo_axis(s, "outer", gamma);
  echo_axis(s, "inner", kappa);
  const GridArgmax best = grid.argmax();
  s.add("grid_max_fidelity", best.value);
  s.add("grid_argmax_gamma_over_lambda", gamma.value(best.outer));
  s.add("grid_argmax_kappa_over_lambda", kappa.value(best.inner));
  s.add("grid_min_fidelity", *std::min_element(grid.values.begin(), grid.values.end()));

  RunParameters closed = base;
  closed.kappa = closed.gamma = 0.0;
  s.add("closed_fidelity", final_fidelity(closed.to_model(), closed.steps));
  for (double rate : {0.05, 0.1}) {
    RunParameters p = base;
    p.kappa = p.gamma = rate;
    s.add("fidelity_kappa_gamma_" + format_number(rate), final_fidelity(p.to_model(), p.steps));
  }
  write_summary(summary_path, s.entries(), o.force);
  return {std::string(id), s.entries(), {csv, summary_path}};
}

struct ZenoRun {
  ZenoComparison cmp;
  Trajectory baseline;
};

ZenoRun zeno_compare_run(int steps, int store_every) {
  ZenoRun out;
  ZenoComparison& c = out.cmp;
  const ModelSpec base = ModelSpec::zeno_baseline(c.omega_z);
  const IntegratorConfig cfg{steps, store_every};
  out.baseline = simulate(base, cfg);
  c.baseline_lambda_tf = base.t_final() * base.lambda;
  const auto phi1 = out.baseline.population_series(Ket::basis(3, 1));
  c.baseline_max_phi1 = *std::max_element(phi1.begin(), phi1.end());
  c.baseline_max_phi1_analytic = std::norm(zeno_baseline_state(c.omega_z, base.t_final() / 2.0)[1]);
  c.baseline_final_fidelity = out.baseline.fidelity_final;

  const ModelSpec sc = ModelSpec::two_atom(c.shortcut_epsilon, c.shortcut_lambda_tf);
  const Trajectory tr = simulate(sc, cfg);
  const auto p = tr.population_series(analysis_state(ModelKind::TwoAtom, "phi1"));
  c.shortcut_max_phi1 = *std::max_element(p.begin(), p.end());
  c.shortcut_final_fidelity = tr.fidelity_final;

  std::vector<double> grid;
  for (int j = 0; j <= 30; ++j) grid.push_back(5.0 + 0.5 * j);
  c.shortcut_minimal = minimal_interaction_time(ModelKind::TwoAtom, kPerfect, grid, steps);
  return out;
}

ScenarioResult run_zeno_compare(const ScenarioOptions& o) {
  const fs::path csv = o.out_dir / "zeno-compare_trajectory.csv";
  const fs::path summary_path = o.out_dir / "zeno-compare_summary.txt";
  ensure_writable(csv, o.force);
  ensure_writable(summary_path, o.force);
  const IntegratorConfig cfg{o.steps, o.store_every};
  cfg.validate();

  const ZenoRun run = zeno_compare_run(o.steps, o.store_every);
  const ZenoComparison& c = run.cmp;
  std::vector<Column> columns;
  for (std::size_t k = 0; k < 3; ++k)
    columns.push_back({basis_catalog(ModelKind::ZenoBaseline).labels[k], run.baseline.population_series(Ket::basis(3, k))});
  write_trajectory_csv(csv, t_over_tf(run.baseline, c.baseline_lambda_tf), columns, o.force);

  Summary s;
  s.add("scenario", "zeno-compare");
  s.add("lambda", 1.0);
  s.add("steps", o.steps);
  s.add("store_every", o.store_every);
  s.add("omega_z_over_lambda", c.omega_z);
  s.add("baseline_lambda_tf", c.baseline_lambda_tf);
  s.add("baseline_max_phi1", c.baseline_max_phi1);
  s.add("baseline_max_phi1_analytic", c.baseline_max_phi1_analytic);
  s.add("baseline_final_fidelity", c.baseline_final_fidelity);
  s.add("shortcut_epsilon", c.shortcut_epsilon);
  s.add("shortcut_lambda_tf", c.shortcut_lambda_tf);
  s.add("shortcut_max_phi1", c.shortcut_max_phi1);
  s.add("shortcut_final_fidelity", c.shortcut_final_fidelity);
  s.add("shortcut_min_lambda_tf", c.shortcut_minimal.lambda_tf);
  s.add("shortcut_min_lambda_tf_epsilon", c.shortcut_minimal.epsilon);
  s.add("speedup", c.baseline_lambda_tf / c.shortcut_minimal.lambda_tf);
  write_summary(summary_path, s.entries(), o.force);
  return {"zeno-compare", s.entries(), {csv, summary_path}};
}

ScenarioResult run_cesium(const ScenarioOptions& o) {
  const fs::path summary_path = o.out_dir / "cesium_summary.txt";
  ensure_writable(summary_path, o.force);
  const CesiumCheck c = cesium_check(o.steps);
  Summary s;
  s.add("scenario", "cesium");
  s.add("model", "two-atom");
  s.add("lambda_over_2pi_mhz", 750.0);
  s.add("kappa_over_2pi_mhz", 3.5);
  s.add("gamma_over_2pi_mhz", 2.62);
  s.add("epsilon", 0.2636);
  s.add("lambda_tf", 10.0);
  s.add("kappa_over_lambda", c.kappa);
  s.add("gamma_over_lambda", c.gamma);
  s.add("steps", o.steps);
  s.add("fidelity", c.fidelity);
  s.add("closed_fidelity", c.closed_fidelity);
  s.add("fidelity_kappa_x1", c.kappa_scaled[0]);
  s.add("fidelity_kappa_x2", c.kappa_scaled[1]);
  s.add("fidelity_kappa_x4", c.kappa_scaled[2]);
  write_summary(summary_path, s.entries(), o.force);
  return {"cesium", s.entries(), {summary_path}};
}

double closed_fidelity(ModelKind kind, double eps, double tf, int steps) {
  RunParameters p;
  p.model = kind;
  p.epsilon = eps;
  p.lambda_tf = tf;
  p.steps = steps;
  return final_fidelity(p.to_model(), steps);
}

}  // namespace

// ---- public ------------------------------------------------------------------

void ScenarioOptions::validate() const {
  IntegratorConfig{steps, store_every}.validate();
  for (const auto& a : grids) a.validate();
}

bool ScenarioResult::has(std::string_view key) const {
  return std::any_of(summary.begin(), summary.end(), [&](const auto& e) { return e.first == key; });
}

const std::string& ScenarioResult::value(std::string_view key) const {
  for (const auto& [k, v] : summary)
    if (k == key) return v;
  throw ParameterError("scenario " + id + ": no summary key '" + std::string(key) + "'");
}

double ScenarioResult::number(std::string_view key) const { return std::stod(value(key)); }

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "fig3d",
                                               "fig4a", "fig4b", "fig5a", "fig5b", "fig6a", "fig6b",
                                               "fig7a", "fig7b", "fig8a", "fig8b"};
  return ids;
}

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    auto v = figure_ids();
    v.push_back("zeno-compare");
    v.push_back("cesium");
    return v;
  }();
  return ids;
}

ScenarioResult run_scenario(std::string_view id, const ScenarioOptions& options) {
  options.validate();
  TrajectorySpec spec;
  if (trajectory_spec(id, spec)) return run_trajectory(id, spec, options);
  if (id == "fig3d") return run_fig3d(options);
  if (id == "fig4a") return run_pulses(options);
  if (id == "fig6a") return run_fig6(id, "gamma_over_lambda", options);
  if (id == "fig6b") return run_fig6(id, "kappa_over_lambda", options);
  if (id == "fig7a") return run_fig7(id, ModelKind::TwoAtom, 0.2636, 10.0, options);
  if (id == "fig7b") return run_fig7(id, ModelKind::ThreeAtom, 0.2596, 9.5, options);
  if (id == "zeno-compare") return run_zeno_compare(options);
  if (id == "cesium") return run_cesium(options);
  std::ostringstream msg;
  msg << "unknown scenario '" << id << "' (known:";
  for (const auto& s : scenario_ids()) msg << ' ' << s;
  msg << ')';
  throw ParameterError(msg.str());
}

OptimalEpsilon optimal_epsilon(ModelKind kind, double lambda_tf, int steps, double tol) {
  if (!(lambda_tf > 0.0)) throw ParameterError("optimal_epsilon: lambda_tf must be positive");
  if (!(tol > 0.0)) throw ParameterError("optimal_epsilon: tolerance must be positive");
  if (kind == ModelKind::ZenoBaseline) throw ParameterError("optimal_epsilon: not defined for the Zeno baseline");
  OptimalEpsilon out;
  auto f = [&](double eps) {
    ++out.evaluations;
    return closed_fidelity(kind, eps, lambda_tf, steps);
  };

  // The coarse scan guards against the secondary optimum of the next pulse family.
  const Axis scan{"epsilon", kEpsLo, kEpsHi, kCoarseSamples};
  const SweepResult coarse =
      sweep_parallel({"unit", 0.0, 0.0, 1}, scan, [&](double, double eps) { return closed_fidelity(kind, eps, lambda_tf, steps); });
  out.evaluations += kCoarseSamples;
  const int k = coarse.argmax().inner;
  double a = scan.value(std::max(0, k - 1));
  double b = scan.value(std::min(kCoarseSamples - 1, k + 1));

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  out.epsilon = fc >= fd ? c : d;
  out.fidelity = std::max(fc, fd);
  if (coarse.values[static_cast<std::size_t>(k)] > out.fidelity) {
    out.epsilon = scan.value(k);
    out.fidelity = coarse.values[static_cast<std::size_t>(k)];
  }
  return out;
}

MinimalTime minimal_interaction_time(ModelKind kind, double threshold, const std::vector<double>& grid, int steps,
                                     double tol) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw ParameterError("minimal_interaction_time: grid must ascend");
  MinimalTime out{std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const OptimalEpsilon hit = optimal_epsilon(kind, grid[j], steps);
    if (hit.fidelity < threshold) continue;
    out = {grid[j], hit.epsilon, hit.fidelity};
    if (j == 0) return out;
    double lo = grid[j - 1], hi = grid[j];
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const OptimalEpsilon m = optimal_epsilon(kind, mid, steps);
      if (m.fidelity >= threshold) {
        hi = mid;
        out = {mid, m.epsilon, m.fidelity};
      } else {
        lo = mid;
      }
    }
    return out;
  }
  return out;
}

ZenoComparison zeno_compare(int steps, int store_every) { return zeno_compare_run(steps, store_every).cmp; }

CesiumCheck cesium_check(int steps) {
  CesiumCheck c;
  c.kappa = 3.5 / 750.0;
  c.gamma = 2.62 / 750.0;
  c.fidelity = final_fidelity(ModelSpec::two_atom(0.2636, 10.0, c.kappa, c.gamma), steps);
  c.closed_fidelity = final_fidelity(ModelSpec::two_atom(0.2636, 10.0), steps);
  const double scales[] = {1.0, 2.0, 4.0};
  for (std::size_t i = 0; i < 3; ++i)
    c.kappa_scaled[i] = final_fidelity(ModelSpec::two_atom(0.2636, 10.0, scales[i] * c.kappa, c.gamma), steps);
  return c;
}

}  // namespace zenosim
