#pragma once

// Fixed-step classical RK4 integration of
//   i d|psi>/dt = H(t)|psi>                                   (hbar = 1)
//   d rho/dt   = i[rho, H] + sum_k (L rho L^dag - {L^dag L, rho}/2)
// No renormalization is applied; norm/trace drift is monitored at stored points.

#include <span>
#include <string>
#include <vector>

#include "zenosim/linalg.hpp"
#include "zenosim/models.hpp"
#include "zenosim/time_operator.hpp"

namespace zenosim {

struct IntegratorConfig {
  int steps = 20000;     // per t_f
  int store_every = 100;  // stored points: t = 0, every store_every steps, and t_f

  void validate() const;
  static IntegratorConfig final_only(int steps = 20000) { return {steps, steps}; }
};

struct Trajectory {
  std::vector<std::string> labels;
  std::vector<double> times;
  std::vector<std::vector<double>> populations;  // [stored point][basis index]
  std::vector<Ket> kets;                         // closed runs
  std::vector<DensityMatrix> densities;          // open runs
  std::size_t target_index = 0;
  double fidelity_final = 0.0;
  double max_drift = 0.0;  // |norm - 1| or |trace - 1| over stored points
  double min_eigenvalue = 0.0;  // open runs: smallest eigenvalue seen at stored points

  bool is_mixed() const noexcept { return !densities.empty(); }
  /// Population of an arbitrary state at every stored point.
  std::vector<double> population_series(const Ket& state) const;
};

/// Throws IntegrationError when the norm drifts by more than 1e-6.
Trajectory integrate_schrodinger(const TimeDependentHamiltonian& h, const Ket& psi0, double t_final,
                                 const IntegratorConfig& cfg = {}, std::size_t target_index = 0);
Trajectory integrate_schrodinger(const ModelSpec& m, const Ket& psi0, const IntegratorConfig& cfg = {});

/// Throws IntegrationError when the trace drifts by more than 1e-6 or an
/// eigenvalue of rho drops below -1e-6.
Trajectory integrate_lindblad(const TimeDependentHamiltonian& h, std::span<const Op> jumps,
                              const DensityMatrix& rho0, double t_final, const IntegratorConfig& cfg = {},
                              std::size_t target_index = 0);
Trajectory integrate_lindblad(const ModelSpec& m, const DensityMatrix& rho0, const IntegratorConfig& cfg = {});

/// Model started in its initial basis state: Schrödinger when kappa = gamma = 0,
/// Lindblad otherwise.
Trajectory simulate(const ModelSpec& m, const IntegratorConfig& cfg = {});

/// F = <target|rho(t_f)|target> from the model's initial basis state.
double final_fidelity(const ModelSpec& m, int steps = 20000);

/// |<basis|psi>|^2
double population(const Ket& state, const Ket& basis_ket);
/// |<basis|rho|basis>|
double population(const DensityMatrix& state, const Ket& basis_ket);
double fidelity(const Ket& final_state, const Ket& target);
double fidelity(const DensityMatrix& final_state, const Ket& target);

}  // namespace zenosim
