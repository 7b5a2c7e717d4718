#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>

#include "zenosim/csv.hpp"
#include "zenosim/dynamics.hpp"
#include "zenosim/errors.hpp"
#include "zenosim/experiments.hpp"
#include "zenosim/sweep.hpp"

namespace zenosim::cli {

namespace {

namespace fs = std::filesystem;

// Everything a subcommand may read; defaults are the headline configuration.
struct RunConfig {
  std::string model = "two-atom";
  std::optional<double> epsilon;
  std::optional<double> lambda_tf;
  std::optional<double> kappa;
  std::optional<double> gamma;
  int steps = 20000;
  int store_every = 100;
  std::optional<std::string> out;
  std::vector<std::string> grids;
  bool force = false;
  bool serial = false;
  std::string scenario;
};

fs::path out_dir(const RunConfig& c) {
  if (c.out) return *c.out;
  if (const char* env = std::getenv("ZENO_SIM_OUT"); env && *env) return env;
  return ".";
}

bool out_requested(const RunConfig& c) {
  const char* env = std::getenv("ZENO_SIM_OUT");
  return c.out.has_value() || (env && *env);
}

const auto kEpsilonRange = CLI::Validator(
    [](const std::string& s) -> std::string {
      const double v = std::stod(s);
      if (v > 0.0 && v < std::numbers::pi / 2) return {};
      return "must lie in (0, pi/2)";
    },
    "in (0, pi/2)");

void add_physics(CLI::App* app, RunConfig& c) {
  app->add_option("--model", c.model, "two-atom, three-atom or zeno")
      ->check(CLI::IsMember({"two-atom", "three-atom", "zeno"}));
  app->add_option("--epsilon", c.epsilon, "pulse parameter epsilon")->check(kEpsilonRange);
  app->add_option("--lambda-tf", c.lambda_tf, "interaction time in units of 1/lambda")->check(CLI::PositiveNumber);
  app->add_option("--kappa", c.kappa, "cavity decay kappa/lambda")->check(CLI::NonNegativeNumber);
  app->add_option("--gamma", c.gamma, "spontaneous emission Gamma/lambda")->check(CLI::NonNegativeNumber);
}

void add_run(CLI::App* app, RunConfig& c) {
  app->add_option("--steps", c.steps, "RK4 steps per run (>= 100)")->check(CLI::Range(100, 100000000));
  app->add_option("--store-every", c.store_every, "store every n-th step")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output directory (default $ZENO_SIM_OUT or .)");
  app->add_flag("--force", c.force, "overwrite existing output files");
}

void add_grid(CLI::App* app, RunConfig& c) {
  app->add_option("--grid", c.grids, "<axis>=<start>:<stop>:<count>; axes epsilon, lambda_tf, kappa, gamma");
}

RunParameters run_parameters(const RunConfig& c) {
  RunParameters p;
  p.model = parse_model_kind(c.model);
  p.epsilon = c.epsilon.value_or(p.model == ModelKind::ThreeAtom ? 0.2596 : 0.2636);
  p.lambda_tf = c.lambda_tf.value_or(p.model == ModelKind::ThreeAtom ? 9.5 : 10.0);
  if (p.model == ModelKind::ZenoBaseline && !c.lambda_tf) p.lambda_tf = std::numbers::pi / 0.1;
  p.kappa = c.kappa.value_or(0.0);
  p.gamma = c.gamma.value_or(0.0);
  p.steps = c.steps;
  p.validate();
  return p;
}

ScenarioOptions scenario_options(const RunConfig& c) {
  ScenarioOptions o;
  o.out_dir = out_dir(c);
  o.steps = c.steps;
  o.store_every = c.store_every;
  o.force = c.force;
  o.parallel = !c.serial;
  o.epsilon = c.epsilon;
  o.lambda_tf = c.lambda_tf;
  o.kappa = c.kappa;
  o.gamma = c.gamma;
  for (const auto& g : c.grids) o.grids.push_back(parse_axis(g));
  return o;
}

void print_summary(const SummaryEntries& s, std::ostream& out) {
  for (const auto& [k, v] : s) out << k << '=' << v << '\n';
}

void echo(SummaryEntries& s, const RunParameters& p, const RunConfig& c) {
  s.emplace_back("model", std::string(to_string(p.model)));
  s.emplace_back("lambda", "1");
  s.emplace_back("epsilon", format_number(p.epsilon));
  s.emplace_back("lambda_tf", format_number(p.lambda_tf));
  s.emplace_back("kappa_over_lambda", format_number(p.kappa));
  s.emplace_back("gamma_over_lambda", format_number(p.gamma));
  s.emplace_back("steps", std::to_string(p.steps));
  s.emplace_back("store_every", std::to_string(c.store_every));
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
  const RunParameters p = run_parameters(c);
  const ModelSpec m = p.to_model();
  const IntegratorConfig cfg{p.steps, c.store_every};
  const fs::path dir = out_dir(c);
  const bool write = out_requested(c);
  if (write) {
    ensure_writable(dir / "simulate_trajectory.csv", c.force);
    ensure_writable(dir / "simulate_summary.txt", c.force);
  }
  const Trajectory tr = simulate(m, cfg);

  char line[32];
  std::snprintf(line, sizeof line, "F=%.3f", tr.fidelity_final);
  out << line << '\n';

  SummaryEntries s;
  echo(s, p, c);
  s.emplace_back("target", tr.labels[tr.target_index]);
  s.emplace_back("final_fidelity", format_number(tr.fidelity_final));
  s.emplace_back("max_drift", format_number(tr.max_drift));
  print_summary(s, out);
  if (write) {
    std::vector<Column> cols;
    for (std::size_t k = 0; k < tr.labels.size(); ++k)
      cols.push_back({tr.labels[k], tr.population_series(Ket::basis(tr.labels.size(), k))});
    std::vector<double> x;
    for (double t : tr.times) x.push_back(t / m.t_final());
    write_trajectory_csv(dir / "simulate_trajectory.csv", x, cols, c.force);
    write_summary(dir / "simulate_summary.txt", s, c.force);
  }
  return 0;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  if (c.grids.size() != 2) throw ParameterError("--grid: sweep needs exactly two grids (outer then inner)");
  const RunParameters p = run_parameters(c);
  const Axis outer = parse_axis(c.grids[0]);
  const Axis inner = parse_axis(c.grids[1]);
  if (outer.name == inner.name) throw ParameterError("--grid: the two axes must differ");
  const fs::path dir = out_dir(c);
  ensure_writable(dir / "sweep_surface.csv", c.force);
  ensure_writable(dir / "sweep_summary.txt", c.force);

  const PointFn f = point_evaluator(p, outer.name, inner.name);
  const SweepResult r = c.serial ? sweep_serial(outer, inner, f) : sweep_parallel(outer, inner, f);
  write_surface_csv(dir / "sweep_surface.csv", r, c.force);

  SummaryEntries s;
  s.emplace_back("scenario", "sweep");
  echo(s, p, c);
  for (const auto* a : {&outer, &inner}) {
    const std::string pre = a == &outer ? "outer" : "inner";
    s.emplace_back(pre + "_axis", a->name);
    s.emplace_back(pre + "_start", format_number(a->start));
    s.emplace_back(pre + "_stop", format_number(a->stop));
    s.emplace_back(pre + "_count", std::to_string(a->count));
  }
  const GridArgmax best = r.argmax();
  s.emplace_back("grid_max_fidelity", format_number(best.value));
  s.emplace_back("grid_argmax_" + outer.name, format_number(outer.value(best.outer)));
  s.emplace_back("grid_argmax_" + inner.name, format_number(inner.value(best.inner)));
  write_summary(dir / "sweep_summary.txt", s, c.force);
  print_summary(s, out);
  return 0;
}

int cmd_scenario(const std::string& id, const RunConfig& c, std::ostream& out) {
  const ScenarioResult r = run_scenario(id, scenario_options(c));
  print_summary(r.summary, out);
  for (const auto& f : r.files) out << "wrote " << f.string() << '\n';
  return 0;
}

int cmd_all_figures(const RunConfig& c, std::ostream& out) {
  const ScenarioOptions o = scenario_options(c);
  for (const auto& id : figure_ids()) {
    const ScenarioResult r = run_scenario(id, o);
    for (const auto& f : r.files) out << "wrote " << f.string() << '\n';
  }
  return 0;
}

int cmd_optimal_eps(const RunConfig& c, std::ostream& out) {
  const RunParameters p = run_parameters(c);
  const OptimalEpsilon r = optimal_epsilon(p.model, p.lambda_tf, p.steps);
  out << "model=" << to_string(p.model) << '\n'
      << "lambda_tf=" << format_number(p.lambda_tf) << '\n'
      << "epsilon=" << format_number(r.epsilon) << '\n'
      << "fidelity=" << format_number(r.fidelity) << '\n'
      << "evaluations=" << r.evaluations << '\n';
  return 0;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortcut-to-adiabaticity population transfer in cavity QED", "zeno-sim"};
  app.require_subcommand(1);
  RunConfig c;

  auto* simulate_cmd = app.add_subcommand("simulate", "integrate a single trajectory");
  add_physics(simulate_cmd, c);
  add_run(simulate_cmd, c);

  auto* sweep_cmd = app.add_subcommand("sweep", "fidelity over two parameter grids");
  add_physics(sweep_cmd, c);
  add_run(sweep_cmd, c);
  add_grid(sweep_cmd, c);
  sweep_cmd->add_flag("--serial", c.serial, "evaluate grid points on one thread");

  auto* scenario_cmd = app.add_subcommand("scenario", "regenerate one figure dataset or in-text number");
  scenario_cmd->add_option("id", c.scenario, "scenario id")->required()->check(CLI::IsMember(scenario_ids()));
  add_physics(scenario_cmd, c);
  add_run(scenario_cmd, c);
  add_grid(scenario_cmd, c);
  scenario_cmd->add_flag("--serial", c.serial, "evaluate grid points on one thread");

  auto* opt_cmd = app.add_subcommand("optimal-eps", "maximize the closed-system fidelity over epsilon");
  add_physics(opt_cmd, c);
  opt_cmd->add_option("--steps", c.steps, "RK4 steps per run (>= 100)")->check(CLI::Range(100, 100000000));

  auto* zeno_cmd = app.add_subcommand("zeno-compare", "plain Zeno baseline against the shortcut");
  add_run(zeno_cmd, c);
  auto* cesium_cmd = app.add_subcommand("cesium", "fidelity at the cesium cavity parameters");
  add_run(cesium_cmd, c);

  auto* all_cmd = app.add_subcommand("all-figures", "write every figure dataset");
  add_run(all_cmd, c);
  add_grid(all_cmd, c);
  all_cmd->add_flag("--serial", c.serial, "evaluate grid points on one thread");

  if (args.empty()) {
    err << app.help();
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*simulate_cmd) return cmd_simulate(c, out);
    if (*sweep_cmd) return cmd_sweep(c, out);
    if (*scenario_cmd) return cmd_scenario(c.scenario, c, out);
    if (*opt_cmd) return cmd_optimal_eps(c, out);
    if (*zeno_cmd) return cmd_scenario("zeno-compare", c, out);
    if (*cesium_cmd) return cmd_scenario("cesium", c, out);
    if (*all_cmd) return cmd_all_figures(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int parse_and_dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_and_dispatch(args, out, err);
}

}  // namespace zenosim::cli
