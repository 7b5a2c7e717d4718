#include "zenosim/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zenosim/errors.hpp"

namespace zenosim {

using std::numbers::pi;

namespace {

bool is_scale(double s, double ref) { return std::abs(s - ref) <= 1e-12; }

}  // namespace

void PulseParams::validate() const {
  std::ostringstream msg;
  if (!(epsilon > 0.0 && epsilon < pi / 2)) {
    msg << "epsilon must lie in (0, pi/2), got " << epsilon;
  } else if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    msg << "t_final must be positive, got " << t_final;
  } else if (!is_scale(scale, kScaleTwoAtom) && !is_scale(scale, kScaleThreeAtom)) {
    msg << "scale must be sqrt(2) or sqrt(3), got " << scale;
  } else if (!(chi0 > 0.0)) {
    msg << "chi0 must be positive, got " << chi0;
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

AuxiliaryAngles auxiliary_angles(const PulseParams& p, double t) {
  const double rate = pi / (2.0 * p.t_final);
  return {p.epsilon, rate * t, 0.0, rate};
}

PulseSchedule::PulseSchedule(const PulseParams& p) : params_(p) {
  p.validate();
  rate_ = pi / (2.0 * p.t_final);
  amplitude_ = p.scale * rate_ / std::tan(p.epsilon);
}

double PulseSchedule::omega1(double t) const { return inside(t) ? amplitude_ * std::sin(rate_ * t) : 0.0; }

double PulseSchedule::omega2(double t) const { return inside(t) ? amplitude_ * std::cos(rate_ * t) : 0.0; }

double PulseSchedule::omega1_dot(double t) const {
  return inside(t) ? amplitude_ * rate_ * std::cos(rate_ * t) : 0.0;
}

double PulseSchedule::omega2_dot(double t) const {
  return inside(t) ? -amplitude_ * rate_ * std::sin(rate_ * t) : 0.0;
}

PulseSchedule design_pulses(const PulseParams& p) { return PulseSchedule(p); }

PulsePair pulses_from_angles(const AuxiliaryAngles& a, double scale) {
  const double cot_g = 1.0 / std::tan(a.gamma);
  const double sb = std::sin(a.beta);
  const double cb = std::cos(a.beta);
  return {scale * (a.beta_dot * cot_g * sb + a.gamma_dot * cb),
          scale * (a.beta_dot * cot_g * cb - a.gamma_dot * sb)};
}

AuxiliaryAngles angle_rates(double gamma, double beta, double omega1, double omega2, double scale) {
  const double sb = std::sin(beta);
  const double cb = std::cos(beta);
  AuxiliaryAngles out{gamma, beta, 0.0, 0.0};
  out.gamma_dot = (omega1 * cb - omega2 * sb) / scale;
  out.beta_dot = std::tan(gamma) * (omega2 * cb + omega1 * sb) / scale;
  return out;
}

Op stirap_hamiltonian(double omega1, double omega2, double scale) {
  Op h(3);
  h.set_hermitian_pair(0, 1, omega1 / scale);
  h.set_hermitian_pair(1, 2, omega2 / scale);
  return h;
}

Op invariant_matrix(const PulseParams& p, double t) {
  p.validate();
  const auto a = auxiliary_angles(p, t);
  const double cg = std::cos(a.gamma), sg = std::sin(a.gamma);
  const double cb = std::cos(a.beta), sb = std::sin(a.beta);
  const double k = p.chi0 / p.scale;
  Op m(3);
  m.set_hermitian_pair(0, 1, k * cg * sb);
  m.set_hermitian_pair(0, 2, cplx(0.0, -k * sg));
  m.set_hermitian_pair(1, 2, k * cg * cb);
  return m;
}

InvariantEigenstates invariant_eigenstates(const PulseParams& p, double t) {
  p.validate();
  const auto a = auxiliary_angles(p, t);
  const double cg = std::cos(a.gamma), sg = std::sin(a.gamma);
  const double cb = std::cos(a.beta), sb = std::sin(a.beta);
  const double h = 1.0 / std::numbers::sqrt2;
  const cplx i(0.0, 1.0);
  InvariantEigenstates out;
  out.zero = Ket{cg * cb, -i * sg, -cg * sb};
  out.plus = Ket{h * (sg * cb + i * sb), h * i * cg, h * (-sg * sb + i * cb)};
  out.minus = Ket{h * (sg * cb - i * sb), h * i * cg, h * (-sg * sb - i * cb)};
  return out;
}

LrPhases lr_phase(const PulseParams& p, int nodes) {
  p.validate();
  const PulseSchedule pulses(p);
  auto integrand = [&](double t) {
    const auto a = auxiliary_angles(p, t);
    return a.beta_dot * std::sin(a.gamma) +
           (pulses.omega1(t) * std::sin(a.beta) + pulses.omega2(t) * std::cos(a.beta)) * std::cos(a.gamma) /
               p.scale;
  };
  const double integral = simpson(integrand, 0.0, p.t_final, nodes);
  return {0.0, -integral, integral};
}

double ratio_r(const PulseParams& p, double lambda) {
  p.validate();
  if (!is_scale(p.scale, kScaleTwoAtom)) throw ParameterError("ratio_r: defined for the two-atom pulses only");
  if (!(lambda > 0.0)) throw ParameterError("ratio_r: lambda must be positive");
  const double num = pi / std::tan(p.epsilon);
  const double a = 2.0 * std::numbers::sqrt2 * lambda * p.t_final;
  return num / std::sqrt(a * a + num * num);
}

double ratio_tau(double zeta, double beta) {
  if (!(zeta > 0.0)) throw ParameterError("ratio_tau: zeta must be positive");
  // sin^2 - cos^2 = -cos(2 beta)
  const double diff = -std::cos(2.0 * beta);
  if (std::abs(diff) <= 1e-12) return std::numeric_limits<double>::infinity();
  const double z2 = zeta * zeta;
  return std::abs((2.0 + std::sqrt(z2 * z2 * diff * diff + 4.0)) / (z2 * diff));
}

double gap_delta_e(double omega1, double omega2, double lambda) {
  const double o1 = omega1 * omega1, o2 = omega2 * omega2, l2 = lambda * lambda;
  const double varpi = std::sqrt((o1 - o2) * (o1 - o2) + 4.0 * l2 * l2);
  // s - varpi rewritten as (s^2 - varpi^2) / (s + varpi) to avoid cancellation
  // when the pulses are weak compared with lambda.
  const double s = o1 + o2 + 2.0 * l2;
  const double s2_minus_varpi2 = 4.0 * o1 * o2 + 4.0 * l2 * (o1 + o2);
  const double vartheta2 = (s + varpi) > 0.0 ? s2_minus_varpi2 / (s + varpi) : 0.0;
  return std::sqrt(std::max(0.0, vartheta2 / 2.0));
}

double adiabaticity_ratio(const PulseParams& p, double t) {
  const PulseSchedule pulses(p);
  const double w1 = pulses.omega1(t), w2 = pulses.omega2(t);
  const double chi2 = w1 * w1 + w2 * w2;
  if (chi2 == 0.0) throw SingularError("adiabaticity_ratio: both pulses vanish (chi = 0)");
  const double theta_dot = (pulses.omega1_dot(t) * w2 - w1 * pulses.omega2_dot(t)) / chi2;
  return std::abs(theta_dot) / (std::sqrt(chi2) / p.scale);
}

}  // namespace zenosim
