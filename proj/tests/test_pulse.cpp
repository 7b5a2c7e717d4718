#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "zenosim/errors.hpp"
#include "zenosim/pulse.hpp"

using namespace zenosim;
using std::numbers::pi;

TEST_CASE("pulse shapes") {
  const PulseSchedule s(PulseParams::two_atom(0.2636, 10.0));
  CHECK(s.amplitude() == doctest::Approx(std::numbers::sqrt2 * pi / 20.0 / std::tan(0.2636)));
  CHECK(s.omega1(0.0) == 0.0);
  CHECK(s.omega2(0.0) == doctest::Approx(s.amplitude()));
  CHECK(s.omega1(10.0) == doctest::Approx(s.amplitude()));
  CHECK(std::abs(s.omega2(10.0)) < 1e-12);
  CHECK(s.omega1(-0.1) == 0.0);
  CHECK(s.omega2(10.1) == 0.0);
  for (double t = 0.0; t <= 10.0; t += 0.37) {
    const double chi2 = s.omega1(t) * s.omega1(t) + s.omega2(t) * s.omega2(t);
    CHECK(chi2 == doctest::Approx(s.amplitude() * s.amplitude()));
    const double h = 1e-5;
    CHECK(s.omega1_dot(t + 2 * h) ==
          doctest::Approx((s.omega1(t + 3 * h) - s.omega1(t + h)) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("pulse parameter validation") {
  CHECK_THROWS_AS(PulseSchedule(PulseParams::two_atom(0.0, 10.0)), ParameterError);
  CHECK_THROWS_AS(PulseSchedule(PulseParams::two_atom(2.0, 10.0)), ParameterError);
  CHECK_THROWS_AS(PulseSchedule(PulseParams::two_atom(0.2, -1.0)), ParameterError);
  PulseParams p = PulseParams::two_atom(0.2, 1.0);
  p.scale = 1.5;
  CHECK_THROWS_AS(p.validate(), ParameterError);
}

TEST_CASE("pulses follow from the auxiliary angles") {
  for (const auto& p : {PulseParams::two_atom(0.2636, 10.0), PulseParams::three_atom(0.2596, 9.5)}) {
    const PulseSchedule s(p);
    for (double t = 0.0; t <= p.t_final; t += p.t_final / 17.0) {
      const auto a = auxiliary_angles(p, t);
      const PulsePair w = pulses_from_angles(a, p.scale);
      CHECK(w.omega1 == doctest::Approx(s.omega1(t)).epsilon(1e-12));
      CHECK(w.omega2 == doctest::Approx(s.omega2(t)).epsilon(1e-12));
      const auto back = angle_rates(a.gamma, a.beta, w.omega1, w.omega2, p.scale);
      CHECK(std::abs(back.gamma_dot) < 1e-12);
      CHECK(back.beta_dot == doctest::Approx(a.beta_dot).epsilon(1e-12));
    }
  }
}

TEST_CASE("invariant satisfies i dI/dt = [H, I]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const bool three = trial % 2;
    const double eps = 0.05 + 1.0 * u(rng);
    const double tf = 2.0 + 30.0 * u(rng);
    const PulseParams p = three ? PulseParams::three_atom(eps, tf) : PulseParams::two_atom(eps, tf);
    const PulseSchedule s(p);
    const double t = tf * (0.05 + 0.9 * u(rng));
    const double h = 1e-4 * tf;
    // Fourth-order central difference.
    const Op d = (1.0 / (12.0 * h)) * (invariant_matrix(p, t - 2 * h) - invariant_matrix(p, t + 2 * h) +
                                       8.0 * (invariant_matrix(p, t + h) - invariant_matrix(p, t - h)));
    const Op h_t = stirap_hamiltonian(s.omega1(t), s.omega2(t), p.scale);
    const Op residual = cplx(0, 1) * d - commutator(h_t, invariant_matrix(p, t));
    worst = std::max(worst, residual.frobenius_norm());
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("invariant eigenstates") {
  const PulseParams p = PulseParams::two_atom(0.2636, 10.0);
  for (double t : {0.0, 2.5, 5.0, 9.0, 10.0}) {
    const Op inv = invariant_matrix(p, t);
    CHECK(inv.is_hermitian());
    const auto e = invariant_eigenstates(p, t);
    const double k = p.chi0 / p.scale;
    CHECK(max_abs_diff(inv * e.zero, Ket(3)) < 1e-14);
    CHECK(max_abs_diff(inv * e.plus, cplx(k) * e.plus) < 1e-14);
    CHECK(max_abs_diff(inv * e.minus, cplx(-k) * e.minus) < 1e-14);
    CHECK(e.zero.is_normalized(1e-14));
    CHECK(std::abs(inner(e.plus, e.minus)) < 1e-14);
  }
  // At t = 0 the zero mode starts on the initial state up to the gamma tilt.
  const auto e0 = invariant_eigenstates(p, 0.0);
  CHECK(std::norm(e0.zero[0]) == doctest::Approx(std::cos(p.epsilon) * std::cos(p.epsilon)));
}

TEST_CASE("lewis-riesenfeld phase quantization") {
  for (int n : {1, 2, 3}) {
    const double eps = std::asin(1.0 / (4.0 * n));
    for (double tf : {5.0, 10.0, 40.0}) {
      const LrPhases ph = lr_phase(PulseParams::two_atom(eps, tf));
      CHECK(ph.alpha0 == 0.0);
      CHECK(std::abs(ph.alpha_plus + 2.0 * n * pi) < 1e-6);
      CHECK(std::abs(ph.alpha_minus - 2.0 * n * pi) < 1e-6);
    }
  }
  // Closed form pi / (2 sin eps) for any epsilon.
  for (double eps : {0.1, 0.2636, 0.7}) {
    const LrPhases ph = lr_phase(PulseParams::three_atom(eps, 7.0), 2001);
    CHECK(ph.alpha_minus == doctest::Approx(pi / (2.0 * std::sin(eps))).epsilon(1e-10));
  }
}

TEST_CASE("simpson quadrature oracle") {
  CHECK(simpson([](double x) { return x * x * x; }, 0.0, 2.0, 3) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(simpson([](double x) { return std::sin(x); }, 0.0, pi, 1001) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("population ratio r") {
  CHECK(std::abs(ratio_r(PulseParams::two_atom(0.2636, 10.0)) - 0.3806) <= 5e-4);
  CHECK(std::abs(ratio_r(PulseParams::two_atom(0.1196, 20.0)) - 0.4195) <= 5e-4);
  // Direct evaluation at (0.0810, 40); the quoted 0.3273 is not reproduced.
  CHECK(ratio_r(PulseParams::two_atom(0.0810, 40.0)) == doctest::Approx(0.32365).epsilon(1e-4));
  CHECK_THROWS_AS(ratio_r(PulseParams::three_atom(0.2, 10.0)), ParameterError);
  // Scaling: doubling lambda at fixed absolute t_f equals doubling lambda t_f.
  CHECK(ratio_r(PulseParams::two_atom(0.3, 5.0), 2.0) ==
        doctest::Approx(ratio_r(PulseParams::two_atom(0.3, 10.0))).epsilon(1e-14));
}

TEST_CASE("ratio tau") {
  CHECK(std::abs(ratio_tau(std::numbers::sqrt2, 0.0) - (1.0 + std::numbers::sqrt2)) <= 1e-12);
  CHECK(std::isinf(ratio_tau(1.0, pi / 4.0)));
  // The minimum over beta sits at the pulse endpoints.
  for (double zeta : {0.5, 1.0, 2.0})
    for (double beta = 0.05; beta < pi / 4.0 - 0.05; beta += 0.1)
      CHECK(ratio_tau(zeta, beta) >= ratio_tau(zeta, 0.0) - 1e-12);
  CHECK_THROWS_AS(ratio_tau(0.0, 0.1), ParameterError);
}

TEST_CASE("adiabaticity ratio") {
  const PulseParams p = PulseParams::two_atom(0.2636, 10.0);
  // theta' = pi/(2 t_f), chi/scale = (pi/(2 t_f)) cot eps  ->  ratio = tan eps.
  CHECK(adiabaticity_ratio(p, 3.0) == doctest::Approx(std::tan(0.2636)).epsilon(1e-12));
  CHECK_THROWS_AS(adiabaticity_ratio(p, 11.0), SingularError);
}
