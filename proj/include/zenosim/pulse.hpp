#pragma once

// Invariant-based inverse engineering of the Rabi pulse pair driving the
// three-level main subsystem.
//
// Units: frequencies in multiples of the atom-cavity coupling lambda, times in
// 1/lambda. The main subsystem Hamiltonian is
//   H_S(t) = (1/scale) [[0, W1, 0], [W1, 0, W2], [0, W2, 0]]
// with scale = sqrt2 (two atoms) or sqrt3 (three atoms). The auxiliary angles
// are fixed to gamma(t) = epsilon and beta(t) = pi t / (2 t_f).

#include <cmath>
#include <numbers>

#include "zenosim/linalg.hpp"

namespace zenosim {

inline const double kScaleTwoAtom = std::numbers::sqrt2;
inline const double kScaleThreeAtom = std::numbers::sqrt3;

struct PulseParams {
  double epsilon = 0.2636;  // constant value of gamma, radians
  double t_final = 10.0;    // lambda * t_f
  double scale = kScaleTwoAtom;
  double chi0 = 1.0;  // invariant prefactor, defaults to lambda

  static PulseParams two_atom(double epsilon, double t_final) {
    return {epsilon, t_final, kScaleTwoAtom, 1.0};
  }
  static PulseParams three_atom(double epsilon, double t_final) {
    return {epsilon, t_final, kScaleThreeAtom, 1.0};
  }

  /// Throws ParameterError unless 0 < epsilon < pi/2, t_final > 0, chi0 > 0 and
  /// scale is sqrt2 or sqrt3.
  void validate() const;
};

struct AuxiliaryAngles {
  double gamma = 0.0;
  double beta = 0.0;
  double gamma_dot = 0.0;
  double beta_dot = 0.0;
};

AuxiliaryAngles auxiliary_angles(const PulseParams& p, double t);

/// The engineered pulse pair. Both pulses vanish outside [0, t_f].
class PulseSchedule {
public:
  PulseSchedule() = default;
  explicit PulseSchedule(const PulseParams& p);

  const PulseParams& params() const noexcept { return params_; }
  /// Peak Rabi frequency, (scale * pi / (2 t_f)) cot(epsilon).
  double amplitude() const noexcept { return amplitude_; }

  double omega1(double t) const;
  double omega2(double t) const;
  double omega1_dot(double t) const;
  double omega2_dot(double t) const;

private:
  bool inside(double t) const { return t >= 0.0 && t <= params_.t_final; }

  PulseParams params_;
  double amplitude_ = 0.0;
  double rate_ = 0.0;  // d(beta)/dt
};

PulseSchedule design_pulses(const PulseParams& p);

/// Pulses recovered from arbitrary auxiliary angles:
///   W1 = scale (beta' cot(gamma) sin(beta) + gamma' cos(beta))
///   W2 = scale (beta' cot(gamma) cos(beta) - gamma' sin(beta))
struct PulsePair {
  double omega1 = 0.0;
  double omega2 = 0.0;
};
PulsePair pulses_from_angles(const AuxiliaryAngles& a, double scale);

/// Right-hand sides of the auxiliary-angle equations for given pulses:
///   gamma' = (W1 cos(beta) - W2 sin(beta)) / scale
///   beta'  = tan(gamma) (W2 cos(beta) + W1 sin(beta)) / scale
AuxiliaryAngles angle_rates(double gamma, double beta, double omega1, double omega2, double scale);

/// 3x3 main-subsystem Hamiltonian for a given pulse pair.
Op stirap_hamiltonian(double omega1, double omega2, double scale);

/// Lewis-Riesenfeld invariant of the main subsystem at time t:
///   (chi0/scale) [[0, cg sb, -i sg], [cg sb, 0, cg cb], [i sg, cg cb, 0]]
Op invariant_matrix(const PulseParams& p, double t);

struct InvariantEigenstates {
  Ket zero;   // eigenvalue 0
  Ket plus;   // eigenvalue +chi0/scale
  Ket minus;  // eigenvalue -chi0/scale
};
InvariantEigenstates invariant_eigenstates(const PulseParams& p, double t);

struct LrPhases {
  double alpha0 = 0.0;
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
};

/// Lewis-Riesenfeld phases accumulated over [0, t_f], by composite Simpson
/// quadrature on `nodes` points (odd, >= 3; even counts are bumped by one).
LrPhases lr_phase(const PulseParams& p, int nodes = 1001);

/// Population ratio parameter of the cavity-photon state at t_f / 2 (two atoms):
///   r = pi cot(eps) / sqrt((2 sqrt2 lambda t_f)^2 + (pi cot(eps))^2)
/// `lambda` rescales when t_final is given in absolute time units.
double ratio_r(const PulseParams& p, double lambda = 1.0);

/// Coefficient ratio of the phi1 and mu2 components of the near-dark
/// eigenstates for pulses of amplitude zeta*lambda at angle beta.
/// Returns +infinity where sin^2(beta) == cos^2(beta) (|cos 2beta| <= 1e-12).
double ratio_tau(double zeta, double beta);

/// Smallest nonzero |eigenvalue| of the rewritten two-atom Hamiltonian:
///   sqrt((W1^2 + W2^2 + 2 lambda^2 - varpi) / 2),
///   varpi = sqrt((W1^2 - W2^2)^2 + 4 lambda^4)
double gap_delta_e(double omega1, double omega2, double lambda);

/// |theta'| / (chi/scale), theta = atan(W1/W2), chi = sqrt(W1^2 + W2^2).
/// Throws SingularError when chi == 0.
double adiabaticity_ratio(const PulseParams& p, double t);

/// Composite Simpson rule on [a, b] with `nodes` points (odd, >= 3).
template <class F>
double simpson(F&& f, double a, double b, int nodes) {
  if (nodes < 3) nodes = 3;
  if (nodes % 2 == 0) ++nodes;
  const int intervals = nodes - 1;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

}  // namespace zenosim
