// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed here.
// Exit status is the number of failed criteria (capped at 125).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "zenosim/dynamics.hpp"
#include "zenosim/experiments.hpp"
#include "zenosim/models.hpp"
#include "zenosim/pulse.hpp"

using namespace zenosim;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  std::fflush(stdout);
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

fs::path scratch() {
  std::string templ = (fs::temp_directory_path() / "zenosim_acceptance_XXXXXX").string();
  if (!mkdtemp(templ.data())) throw std::runtime_error("cannot create scratch directory");
  return templ;
}

Ket final_ket(const ModelSpec& m, int steps) {
  return simulate(m, IntegratorConfig::final_only(steps)).kets.back();
}

}  // namespace

int main() {
  const fs::path dir = scratch();
  ScenarioOptions opts;
  opts.out_dir = dir;

  report("headline-transfer", [] {
    const auto t0 = Clock::now();
    const double f = final_fidelity(ModelSpec::two_atom(0.2636, 10.0));
    const double dt = seconds_since(t0);
    return Outcome{f >= 0.999 && dt < 1.0, fmt("F=%.6f (>= 0.999), %.3f s (< 1 s)", f, dt)};
  });

  report("suboptimal-epsilon", [] {
    const double f = final_fidelity(ModelSpec::two_atom(std::asin(0.25), 10.0));
    return Outcome{within(f, 0.9935, 0.002), fmt("F=%.6f (0.9935 +- 0.002)", f)};
  });

  report("pulse-amplitude", [] {
    const double a = PulseSchedule(PulseParams::two_atom(0.2636, 10.0)).amplitude();
    return Outcome{within(a, 0.8232, 5e-4), fmt("peak Omega/lambda=%.6f (0.8232 +- 5e-4)", a)};
  });

  report("ratio-checks", [] {
    const double r1 = ratio_r(PulseParams::two_atom(0.2636, 10.0));
    const double r2 = ratio_r(PulseParams::two_atom(0.1196, 20.0));
    const double tau = ratio_tau(std::numbers::sqrt2, 0.0);
    const bool ok = within(r1, 0.3806, 5e-4) && within(r2, 0.4195, 5e-4) &&
                    within(tau, 1.0 + std::numbers::sqrt2, 1e-12);
    return Outcome{ok, fmt("r=%.6f (0.3806), r=%.6f (0.4195) +- 5e-4; tau_min-(1+sqrt2)=%.1e (<= 1e-12)", r1, r2,
                           tau - 1.0 - std::numbers::sqrt2)};
  });

  report("lr-phase-quantization", [] {
    double worst = 0.0;
    for (int n : {1, 2, 3}) {
      const LrPhases ph = lr_phase(PulseParams::two_atom(std::asin(1.0 / (4.0 * n)), 10.0));
      worst = std::max({worst, std::abs(ph.alpha_plus + 2 * n * std::numbers::pi),
                        std::abs(ph.alpha_minus - 2 * n * std::numbers::pi)});
    }
    return Outcome{worst <= 1e-6, fmt("max |alpha -+ 2N pi| = %.2e for N=1,2,3 (<= 1e-6)", worst)};
  });

  report("optimal-epsilon-recovery", [&] {
    const auto t0 = Clock::now();
    const ScenarioResult r = run_scenario("fig3d", opts);
    const double dt = seconds_since(t0);
    const double grid_eps = r.number("row_argmax_epsilon");
    const double opt_eps = r.number("optimal_epsilon");
    const double min_tf = r.number("min_lambda_tf");
    const bool ok = r.number("row_lambda_tf") == 10.0 && within(grid_eps, 0.2636, 0.01) &&
                    within(opt_eps, 0.2636, 0.01) && within(min_tf, 7.3, 0.3) && dt < 120.0;
    return Outcome{ok, fmt("argmax eps at 10: grid %.4f, refined %.5f (0.2636 +- 0.01); min lambda t_f=%.4f "
                           "(7.3 +- 0.3; grid %.1f); %.1f s (< 120 s)",
                           grid_eps, opt_eps, min_tf, r.number("min_lambda_tf_grid"), dt)};
  });

  report("open-two-atom", [] {
    const double f = final_fidelity(ModelSpec::two_atom(0.2636, 10.0, 0.1, 0.1));
    return Outcome{within(f, 0.8703, 0.01), fmt("F=%.6f (0.8703 +- 0.01)", f)};
  });

  report("three-atom", [&] {
    const double closed = final_fidelity(ModelSpec::three_atom(0.2596, 9.5));
    const double open = final_fidelity(ModelSpec::three_atom(0.2596, 9.5, 0.05, 0.05));
    const ScenarioResult r = run_scenario("fig8b", opts);
    const double p4 = r.number("max_Phi4"), p5 = r.number("max_Phi5"), mu = r.number("max_mu_minus");
    const bool ok = within(closed, 0.999, 0.001) && within(open, 0.8889, 0.01) && p4 <= 0.01 && p5 <= 0.01 &&
                    within(mu, 0.048, 0.01);
    return Outcome{ok, fmt("F=%.6f (0.999 +- 0.001), open F=%.6f (0.8889 +- 0.01), max P(Phi4)=%.5f "
                           "P(Phi5)=%.5f (<= 0.01), max P(mu-)=%.5f (0.048 +- 0.01)",
                           closed, open, p4, p5, mu)};
  });

  report("cesium-parameters", [] {
    const CesiumCheck c = cesium_check();
    return Outcome{c.fidelity > 0.992, fmt("F=%.6f (> 0.992)", c.fidelity)};
  });

  report("zeno-baseline", [] {
    const ModelSpec m = ModelSpec::zeno_baseline(0.1);
    const Trajectory tr = simulate(m);
    const auto phi1 = tr.population_series(Ket::basis(3, 1));
    const double tf = m.t_final() * m.lambda;
    const double pmax = *std::max_element(phi1.begin(), phi1.end());
    const bool ok = within(tf, 31.416, 0.001) && within(pmax, 0.5, 0.001);
    return Outcome{ok, fmt("lambda t_f=%.5f (31.416 +- 0.001), max P(phi1)=%.6f (0.5 +- 0.001)", tf, pmax)};
  });

  report("property-suites", [] {
    std::ostringstream why;
    bool ok = true;
    auto need = [&](bool cond, const std::string& what) {
      if (!cond) {
        ok = false;
        why << what << "; ";
      }
    };
    const ModelSpec two = ModelSpec::two_atom(0.2636, 10.0);
    const ModelSpec three = ModelSpec::three_atom(0.2596, 9.5);

    // Hermiticity, norm, trace.
    double herm = 0.0;
    for (const auto* m : {&two, &three})
      for (int k = 0; k <= 100; ++k) herm = std::max(herm, h_total(*m, m->t_final() * k / 100.0).hermitian_deviation());
    const Trajectory closed = simulate(two);
    const Trajectory open = simulate(ModelSpec::two_atom(0.2636, 10.0, 0.1, 0.1));
    need(herm <= 1e-8, "hermiticity");
    need(closed.max_drift <= 1e-8, "norm drift");
    need(open.max_drift <= 1e-8, "trace drift");

    // Dark-state annihilation.
    double dark = 0.0;
    for (const auto* m : {&two, &three})
      for (int k = 0; k <= 100; ++k) {
        const double t = m->t_final() * k / 100.0;
        dark = std::max(dark, (h_total(*m, t) * dark_state(*m, t)).norm());
      }
    need(dark <= 1e-10, "dark-state annihilation");

    // Invariant equation, fourth-order central difference.
    double inv = 0.0;
    const PulseParams p = two.pulse.params();
    for (int k = 1; k < 20; ++k) {
      const double t = p.t_final * k / 20.0, h = 1e-3;
      const Op d = (1.0 / (12.0 * h)) * (invariant_matrix(p, t - 2 * h) - invariant_matrix(p, t + 2 * h) +
                                         8.0 * (invariant_matrix(p, t + h) - invariant_matrix(p, t - h)));
      const Op res = cplx(0, 1) * d - commutator(stirap_hamiltonian(two.omega1(t), two.omega2(t), p.scale),
                                                 invariant_matrix(p, t));
      inv = std::max(inv, res.frobenius_norm());
    }
    need(inv <= 1e-6, "invariant residual");

    // RK4 order against a 4x finer reference.
    const Ket ref = final_ket(two, 1600);
    const double order = (final_ket(two, 200) - ref).norm() / (final_ket(two, 400) - ref).norm();
    need(order >= 12.0 && order <= 20.0, "rk4 order");

    // Lindblad without decay against Schrodinger.
    const Trajectory lind = integrate_lindblad(two, DensityMatrix::pure(Ket::basis(6, 0)));
    double diff = 0.0;
    for (std::size_t i = 0; i < lind.times.size(); ++i)
      for (std::size_t j = 0; j < 6; ++j) diff = std::max(diff, std::abs(lind.populations[i][j] - closed.populations[i][j]));
    need(diff <= 1e-6, "lindblad vs schrodinger");

    // Theta states against the eigensolver.
    double theta = 0.0;
    for (int k = 1; k < 50; ++k) {
      const double t = two.t_final() * k / 50.0;
      const double w1 = two.omega1(t), w2 = two.omega2(t);
      if (std::abs(w1 - w2) < 1e-6) continue;
      const Op h = h_rewritten_two_atom(w1, w2, 1.0);
      const ThetaStates th = theta_pm_states(w1, w2, 1.0);
      const ThetaStates num = theta_pm_states_numeric(w1, w2, 1.0);
      const double de = gap_delta_e(w1, w2, 1.0);
      theta = std::max({theta, (h * th.plus - cplx(de) * th.plus).norm(), (h * th.minus + cplx(de) * th.minus).norm(),
                        1.0 - std::abs(inner(num.plus, th.plus)), 1.0 - std::abs(inner(num.minus, th.minus))});
    }
    need(theta <= 1e-8, "theta residual");

    return Outcome{ok, fmt("herm %.1e, drift %.1e/%.1e, dark %.1e, invariant %.1e, rk4 ratio %.2f, lindblad %.1e, "
                           "theta %.1e %s",
                           herm, closed.max_drift, open.max_drift, dark, inv, order, diff, theta, why.str().c_str())};
  });

  fs::remove_all(dir);
  std::printf("%d criteria failed\n", failures);
  return std::min(failures, 125);
}
