#include "zenosim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zenosim/errors.hpp"

namespace zenosim {

namespace {

constexpr double kDriftLimit = 1e-6;
constexpr double kNegativityLimit = -1e-6;

// Nonzero pattern of H(t) with per-entry constant part and per-envelope weights,
// so each RK stage costs one envelope call per term plus nnz multiply-adds.
class SparseGenerator {
public:
  SparseGenerator(const TimeDependentHamiltonian& h, const Op& constant_shift) : h_(h), n_(h.dim()) {
    const auto& terms = h.terms();
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) {
        Entry e{r, c, h.constant()(r, c) + constant_shift(r, c), {}};
        bool nonzero = e.base != 0.0;
        for (const auto& term : terms) {
          e.weights.push_back(term.op(r, c));
          nonzero = nonzero || term.op(r, c) != 0.0;
        }
        if (nonzero) entries_.push_back(std::move(e));
      }
    envelope_values_.resize(terms.size());
    values_.resize(entries_.size());
  }

  void evaluate(double t) {
    const auto& terms = h_.terms();
    for (std::size_t k = 0; k < terms.size(); ++k) envelope_values_[k] = terms[k].envelope(t);
    for (std::size_t e = 0; e < entries_.size(); ++e) {
      cplx v = entries_[e].base;
      for (std::size_t k = 0; k < envelope_values_.size(); ++k) v += envelope_values_[k] * entries_[e].weights[k];
      values_[e] = v;
    }
  }

  // out = G * x for a column vector x
  void apply_vector(const cplx* x, cplx* out) const {
    std::fill(out, out + n_, cplx(0.0));
    for (std::size_t e = 0; e < entries_.size(); ++e) out[entries_[e].row] += values_[e] * x[entries_[e].col];
  }

  // out = G * X for a row-major n x n matrix X
  void apply_matrix(const cplx* x, cplx* out) const {
    std::fill(out, out + n_ * n_, cplx(0.0));
    for (std::size_t e = 0; e < entries_.size(); ++e) {
      const cplx v = values_[e];
      const cplx* src = x + entries_[e].col * n_;
      cplx* dst = out + entries_[e].row * n_;
      for (std::size_t j = 0; j < n_; ++j) dst[j] += v * src[j];
    }
  }

private:
  struct Entry {
    std::size_t row, col;
    cplx base;
    std::vector<cplx> weights;
  };
  const TimeDependentHamiltonian& h_;
  std::size_t n_;
  std::vector<Entry> entries_;
  std::vector<double> envelope_values_;
  std::vector<cplx> values_;
};

struct Triplet {
  std::size_t row, col;
  cplx value;
};

std::vector<std::vector<Triplet>> sparse_jumps(std::span<const Op> jumps) {
  std::vector<std::vector<Triplet>> out;
  for (const auto& op : jumps) {
    std::vector<Triplet> nz;
    for (std::size_t r = 0; r < op.dim(); ++r)
      for (std::size_t c = 0; c < op.dim(); ++c)
        if (op(r, c) != 0.0) nz.push_back({r, c, op(r, c)});
    if (!nz.empty()) out.push_back(std::move(nz));
  }
  return out;
}

template <class Rhs>
class Rk4 {
public:
  explicit Rk4(std::size_t size) : k1_(size), k2_(size), k3_(size), k4_(size), tmp_(size) {}

  // Advances y from t to t_next; stage times never leave [t, t_next].
  void step(double t, double t_next, std::vector<cplx>& y, Rhs& f) {
    const std::size_t n = y.size();
    const double dt = t_next - t;
    f(t, y.data(), k1_.data());
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * dt * k1_[i];
    f(t + 0.5 * dt, tmp_.data(), k2_.data());
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * dt * k2_[i];
    f(t + 0.5 * dt, tmp_.data(), k3_.data());
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + dt * k3_[i];
    f(t_next, tmp_.data(), k4_.data());
    for (std::size_t i = 0; i < n; ++i) y[i] += dt / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
  }

private:
  std::vector<cplx> k1_, k2_, k3_, k4_, tmp_;
};

// The last grid point is t_final exactly, so pulses switched off beyond the
// window are never sampled by a rounding overshoot.
double grid_time(double t_final, int k, int steps) {
  return k == steps ? t_final : t_final * static_cast<double>(k) / static_cast<double>(steps);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i + 1));
  return labels;
}

void fail(const char* what, double drift, int steps) {
  std::ostringstream msg;
  msg << what << " drift " << drift << " exceeds " << kDriftLimit << " at " << steps
      << " steps; increase the step count";
  throw IntegrationError(msg.str());
}

}  // namespace

void IntegratorConfig::validate() const {
  if (steps < 100) throw ParameterError("IntegratorConfig: steps must be >= 100, got " + std::to_string(steps));
  if (store_every < 1) throw ParameterError("IntegratorConfig: store_every must be >= 1");
}

std::vector<double> Trajectory::population_series(const Ket& state) const {
  std::vector<double> out;
  if (is_mixed()) {
    out.reserve(densities.size());
    for (const auto& rho : densities) out.push_back(population(rho, state));
  } else {
    out.reserve(kets.size());
    for (const auto& k : kets) out.push_back(population(k, state));
  }
  return out;
}

Trajectory integrate_schrodinger(const TimeDependentHamiltonian& h, const Ket& psi0, double t_final,
                                 const IntegratorConfig& cfg, std::size_t target_index) {
  cfg.validate();
  if (!(t_final > 0.0)) throw ParameterError("integrate_schrodinger: t_final must be positive");
  if (psi0.dim() != h.dim()) throw DimensionError("integrate_schrodinger: state/Hamiltonian dimension mismatch");
  if (!psi0.is_normalized()) throw ParameterError("integrate_schrodinger: initial state is not normalized");
  const std::size_t n = h.dim();
  if (target_index >= n) throw DimensionError("integrate_schrodinger: target index out of range");

  SparseGenerator gen(h, Op::zero(n));
  auto rhs = [&gen, n](double t, const cplx* y, cplx* dy) {
    gen.evaluate(t);
    gen.apply_vector(y, dy);
    for (std::size_t i = 0; i < n; ++i) dy[i] *= cplx(0.0, -1.0);
  };
  Rk4<decltype(rhs)> rk(n);

  Trajectory traj;
  traj.labels = default_labels(n);
  traj.target_index = target_index;
  std::vector<cplx> y(psi0.amplitudes().begin(), psi0.amplitudes().end());
  auto store = [&](double t) {
    Ket k = Ket(std::vector<cplx>(y));
    const double drift = std::abs(k.norm() - 1.0);
    traj.max_drift = std::max(traj.max_drift, drift);
    if (drift > kDriftLimit) fail("norm", drift, cfg.steps);
    std::vector<double> pops(n);
    for (std::size_t i = 0; i < n; ++i) pops[i] = std::norm(y[i]);
    traj.times.push_back(t);
    traj.populations.push_back(std::move(pops));
    traj.kets.push_back(std::move(k));
  };

  store(0.0);
  for (int s = 0; s < cfg.steps; ++s) {
    const double t_next = grid_time(t_final, s + 1, cfg.steps);
    rk.step(grid_time(t_final, s, cfg.steps), t_next, y, rhs);
    if ((s + 1) % cfg.store_every == 0 || s + 1 == cfg.steps) store(t_next);
  }
  traj.fidelity_final = traj.populations.back()[target_index];
  return traj;
}

Trajectory integrate_schrodinger(const ModelSpec& m, const Ket& psi0, const IntegratorConfig& cfg) {
  const BasisCatalog basis = basis_catalog(m.kind);
  Trajectory traj = integrate_schrodinger(hamiltonian(m), psi0, m.t_final(), cfg, basis.target_index);
  traj.labels = basis.labels;
  return traj;
}

Trajectory integrate_lindblad(const TimeDependentHamiltonian& h, std::span<const Op> jumps, const DensityMatrix& rho0,
                              double t_final, const IntegratorConfig& cfg, std::size_t target_index) {
  cfg.validate();
  if (!(t_final > 0.0)) throw ParameterError("integrate_lindblad: t_final must be positive");
  const std::size_t n = h.dim();
  if (rho0.dim() != n) throw DimensionError("integrate_lindblad: state/Hamiltonian dimension mismatch");
  for (const auto& l : jumps)
    if (l.dim() != n) throw DimensionError("integrate_lindblad: jump operator dimension mismatch");
  if (target_index >= n) throw DimensionError("integrate_lindblad: target index out of range");

  // H_eff = H - (i/2) sum L^dag L ; d rho = -i (H_eff rho - rho H_eff^dag) + sum L rho L^dag
  Op decay(n);
  for (const auto& l : jumps) decay += l.dagger() * l;
  const Op shift = cplx(0.0, -0.5) * decay;
  SparseGenerator gen(h, shift);
  const auto sparse = sparse_jumps(jumps);

  std::vector<cplx> x(n * n);
  auto rhs = [&](double t, const cplx* rho, cplx* drho) {
    gen.evaluate(t);
    gen.apply_matrix(rho, x.data());
    // -i (X - X^dag), X = H_eff rho; rho H_eff^dag = X^dag because rho is Hermitian.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const cplx d = x[r * n + c] - std::conj(x[c * n + r]);
        drho[r * n + c] = cplx(d.imag(), -d.real());
      }
    for (const auto& nz : sparse)
      for (const auto& a : nz)
        for (const auto& b : nz) drho[a.row * n + b.row] += a.value * rho[a.col * n + b.col] * std::conj(b.value);
  };
  Rk4<decltype(rhs)> rk(n * n);

  Trajectory traj;
  traj.labels = default_labels(n);
  traj.target_index = target_index;
  traj.min_eigenvalue = 1.0;
  std::vector<cplx> y(rho0.op().data().begin(), rho0.op().data().end());
  auto store = [&](double t) {
    Op rho(n);
    std::copy(y.begin(), y.end(), rho.data().begin());
    const double drift = std::abs(rho.trace().real() - 1.0);
    traj.max_drift = std::max(traj.max_drift, drift);
    if (drift > kDriftLimit) fail("trace", drift, cfg.steps);
    DensityMatrix dm = DensityMatrix::unchecked(std::move(rho));
    const double min_ev = dm.min_eigenvalue();
    traj.min_eigenvalue = std::min(traj.min_eigenvalue, min_ev);
    if (min_ev < kNegativityLimit) {
      std::ostringstream msg;
      msg << "density matrix eigenvalue " << min_ev << " below " << kNegativityLimit << " at t = " << t
          << "; increase the step count";
      throw IntegrationError(msg.str());
    }
    std::vector<double> pops(n);
    for (std::size_t i = 0; i < n; ++i) pops[i] = y[i * n + i].real();
    traj.times.push_back(t);
    traj.populations.push_back(std::move(pops));
    traj.densities.push_back(std::move(dm));
  };

  store(0.0);
  for (int s = 0; s < cfg.steps; ++s) {
    const double t_next = grid_time(t_final, s + 1, cfg.steps);
    rk.step(grid_time(t_final, s, cfg.steps), t_next, y, rhs);
    if ((s + 1) % cfg.store_every == 0 || s + 1 == cfg.steps) store(t_next);
  }
  traj.fidelity_final = std::abs(traj.populations.back()[target_index]);
  return traj;
}

Trajectory integrate_lindblad(const ModelSpec& m, const DensityMatrix& rho0, const IntegratorConfig& cfg) {
  const BasisCatalog basis = basis_catalog(m.kind);
  const auto jumps = lindblad_ops(m);
  Trajectory traj = integrate_lindblad(hamiltonian(m), jumps, rho0, m.t_final(), cfg, basis.target_index);
  traj.labels = basis.labels;
  return traj;
}

Trajectory simulate(const ModelSpec& m, const IntegratorConfig& cfg) {
  const BasisCatalog basis = basis_catalog(m.kind);
  const Ket psi0 = Ket::basis(basis.dim, basis.initial_index);
  if (m.kappa == 0.0 && m.gamma_total == 0.0) return integrate_schrodinger(m, psi0, cfg);
  return integrate_lindblad(m, DensityMatrix::pure(psi0), cfg);
}

double final_fidelity(const ModelSpec& m, int steps) {
  return simulate(m, IntegratorConfig::final_only(steps)).fidelity_final;
}

double population(const Ket& state, const Ket& basis_ket) { return std::norm(inner(basis_ket, state)); }

double population(const DensityMatrix& state, const Ket& basis_ket) {
  return std::abs(expectation(state.op(), basis_ket));
}

double fidelity(const Ket& final_state, const Ket& target) { return population(final_state, target); }

double fidelity(const DensityMatrix& final_state, const Ket& target) { return population(final_state, target); }

}  // namespace zenosim
