#pragma once

// Cavity-QED models: two Lambda atoms in a single-mode cavity, three atoms in a
// bimodal cavity, and the constant-pulse Zeno baseline.
//
// Extended bases (index order):
//   TwoAtom   : psi1..psi5 = |f g 0>, |e g 0>, |g g 1>, |g e 0>, |g f 0>, then leak |g g 0>
//   ThreeAtom : phi1..phi7 = |f g+ g- 0>, |e g+ g- 0>, |g+ g+ g- 1+>, |g+ e g- 0>,
//               |g+ g- g- 1->, |g+ g- e 0>, |g+ g- f 0>,
//               then leaks |g+ g+ g- 0>, |g+ g- g- 0>
//   ZenoBaseline : psi0, phi1, psi5 (effective three-level model, no leaks)
// Leak states collect population that decays out of the working subspace; no
// Hamiltonian term touches them.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zenosim/linalg.hpp"
#include "zenosim/pulse.hpp"
#include "zenosim/time_operator.hpp"

namespace zenosim {

enum class ModelKind { TwoAtom, ThreeAtom, ZenoBaseline };

std::string_view to_string(ModelKind kind);
/// Accepts "two-atom", "three-atom", "zeno". Throws ParameterError otherwise.
ModelKind parse_model_kind(std::string_view name);

struct ModelSpec {
  ModelKind kind = ModelKind::TwoAtom;
  double lambda = 1.0;
  double kappa = 0.0;        // cavity decay, per mode
  double gamma_total = 0.0;  // total spontaneous emission, Gamma/2 per channel
  PulseSchedule pulse;       // TwoAtom / ThreeAtom
  double omega_z = 0.1;      // ZenoBaseline constant Rabi frequency

  static ModelSpec two_atom(double epsilon, double t_final, double kappa = 0.0, double gamma_total = 0.0);
  static ModelSpec three_atom(double epsilon, double t_final, double kappa = 0.0, double gamma_total = 0.0);
  static ModelSpec zeno_baseline(double omega_z);

  /// lambda > 0, kappa >= 0, gamma_total >= 0, omega_z > 0 for the baseline.
  void validate() const;

  /// Interaction time: the pulse window, or pi/omega_z for the baseline.
  double t_final() const;
  double omega1(double t) const;
  double omega2(double t) const;
};

struct BasisCatalog {
  std::vector<std::string> labels;
  std::size_t dim = 0;
  std::vector<std::size_t> leak_indices;
  std::size_t initial_index = 0;
  std::size_t target_index = 0;
};

BasisCatalog basis_catalog(ModelKind kind);

/// Atom-cavity coupling on the working (non-leak) basis: 5x5 or 7x7.
Op coupling_hamiltonian(ModelKind kind, double lambda);

/// Unit-amplitude laser channels on the working basis, one per pulse.
std::vector<Op> drive_channels(ModelKind kind);

/// Full interaction-picture Hamiltonian on the extended basis.
TimeDependentHamiltonian hamiltonian(const ModelSpec& m);
Op h_total(const ModelSpec& m, double t);

struct ZenoGroup {
  double eigenvalue = 0.0;
  std::vector<Ket> states;
};

struct ZenoDecomposition {
  std::vector<double> eigenvalues;  // ascending, one per eigenvector
  std::vector<Ket> eigenvectors;
  std::vector<ZenoGroup> groups;  // degenerate eigenvalues merged, ascending
  /// couplings[n][m][l] = <Phi_n| channel_m |basis_l>
  std::vector<std::vector<std::vector<cplx>>> couplings;

  const ZenoGroup& group_at(double eigenvalue, double tol) const;
  Op projector(const ZenoGroup& g) const;
};

/// Eigen-decomposition of the coupling Hamiltonian, grouped by eigenvalue
/// (degeneracy tolerance 1e-9 * lambda).
ZenoDecomposition zeno_partition(const Op& h_ac, double lambda, std::span<const Op> channels = {});

/// (1/scale) [[0, W1, 0], [W1, 0, W2], [0, W2, 0]] for the main subsystem.
Op h_subsystem(const ModelSpec& m, double t);
/// h_subsystem as a time-dependent operator on (initial, bridge, target).
TimeDependentHamiltonian subsystem_hamiltonian(const ModelSpec& m);

/// Intermediate-basis vectors of the rewritten Hamiltonian, expressed on the
/// extended basis:
///   TwoAtom   : psi1, psi5, phi1, mu2, psi3
///   ThreeAtom : phi1, phi7, Phi1, mu-, mu+
std::vector<Ket> rewritten_basis(ModelKind kind);
std::vector<std::string> rewritten_labels(ModelKind kind);

/// Rewritten Hamiltonian in the rewritten_basis ordering (5x5), built from the
/// closed-form couplings. Three-atom: the sqrt3-lambda subsystems are dropped.
Op h_rewritten(const ModelSpec& m, double t);

/// Components of `k` (extended basis) on the rewritten basis.
Ket to_rewritten(ModelKind kind, const Ket& k);

/// Normalized dark state on the extended basis. Throws SingularError when both
/// pulses vanish.
Ket dark_state(const ModelSpec& m, double t);

struct DiagnosticSet {
  double n2 = 0.0;  // two-atom dark-state normalization
  double n3 = 0.0;  // three-atom dark-state normalization
  double r = 0.0;   // W1 W2 / (N2 lambda)
  double tau = 0.0;
  double delta_e = 0.0;
  double varpi = 0.0;
  double vartheta = 0.0;
  double varsigma = 0.0;
};

DiagnosticSet diagnostics(double omega1, double omega2, double lambda);

struct ThetaStates {
  Ket plus;   // eigenvalue +|dE|
  Ket minus;  // eigenvalue -|dE|
};

/// Closed-form near-dark eigenstates of the two-atom rewritten Hamiltonian, in
/// the rewritten basis. Throws SingularError when W1^2 == W2^2.
ThetaStates theta_pm_states(double omega1, double omega2, double lambda);
/// Same states from the Jacobi eigensolver; defined for W1 == W2 as well.
ThetaStates theta_pm_states_numeric(double omega1, double omega2, double lambda);

/// Rewritten two-atom Hamiltonian for explicit pulse values.
Op h_rewritten_two_atom(double omega1, double omega2, double lambda);

/// Analytic constant-pulse evolution (psi0, phi1, psi5) from psi0 at time t.
Ket zeno_baseline_state(double omega1, double omega2, double t);
Ket zeno_baseline_state(double omega_z, double t);

/// Jump operators on the extended basis.
///   TwoAtom   : sqrt(k) a, sqrt(G/2)|f>1<e|, sqrt(G/2)|f>2<e|, sqrt(G/2)|g>1<e|, sqrt(G/2)|g>2<e|
///   ThreeAtom : sqrt(k) a+, sqrt(k) a-, |f>1<e|, |f>3<e|, |g+>1<e|, |g->3<e|, |g+>2<e|, |g->2<e| (each sqrt(G/2))
///   ZenoBaseline : none
std::vector<Op> lindblad_ops(const ModelSpec& m);

struct NamedState {
  std::string label;
  Ket ket;
};

/// Coupling-eigenbasis states and their combinations used in the population
/// plots, on the extended basis.
///   TwoAtom   : phi1, phi2, phi3, mu1, mu2
///   ThreeAtom : Phi1..Phi5, mu+, mu-
std::vector<NamedState> analysis_states(ModelKind kind);
Ket analysis_state(ModelKind kind, std::string_view label);

}  // namespace zenosim
