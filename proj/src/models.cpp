#include "zenosim/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zenosim/errors.hpp"

namespace zenosim {

namespace {

using std::numbers::sqrt2;
using std::numbers::sqrt3;

constexpr std::size_t kTwoAtomDim = 6;
constexpr std::size_t kThreeAtomDim = 9;
constexpr std::size_t kZenoDim = 3;

Ket combo(std::size_t dim, std::initializer_list<std::pair<std::size_t, double>> terms, double scale) {
  Ket k(dim);
  for (const auto& [idx, c] : terms) k[idx] = c * scale;
  return k;
}

Op single_entry(std::size_t dim, std::size_t row, std::size_t col, double value) {
  Op op(dim);
  op(row, col) = value;
  return op;
}

void require_cavity_model(ModelKind kind, const char* where) {
  if (kind == ModelKind::ZenoBaseline)
    throw ParameterError(std::string(where) + ": not defined for the Zeno baseline model");
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::TwoAtom:
      return "two-atom";
    case ModelKind::ThreeAtom:
      return "three-atom";
    case ModelKind::ZenoBaseline:
      return "zeno";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "two-atom") return ModelKind::TwoAtom;
  if (name == "three-atom") return ModelKind::ThreeAtom;
  if (name == "zeno") return ModelKind::ZenoBaseline;
  throw ParameterError("unknown model '" + std::string(name) + "' (expected two-atom, three-atom or zeno)");
}

// ---- ModelSpec -------------------------------------------------------------

ModelSpec ModelSpec::two_atom(double epsilon, double t_final, double kappa, double gamma_total) {
  ModelSpec m;
  m.kind = ModelKind::TwoAtom;
  m.kappa = kappa;
  m.gamma_total = gamma_total;
  m.pulse = design_pulses(PulseParams::two_atom(epsilon, t_final));
  m.validate();
  return m;
}

ModelSpec ModelSpec::three_atom(double epsilon, double t_final, double kappa, double gamma_total) {
  ModelSpec m;
  m.kind = ModelKind::ThreeAtom;
  m.kappa = kappa;
  m.gamma_total = gamma_total;
  m.pulse = design_pulses(PulseParams::three_atom(epsilon, t_final));
  m.validate();
  return m;
}

ModelSpec ModelSpec::zeno_baseline(double omega_z) {
  ModelSpec m;
  m.kind = ModelKind::ZenoBaseline;
  m.omega_z = omega_z;
  m.validate();
  return m;
}

void ModelSpec::validate() const {
  std::ostringstream msg;
  if (!(lambda > 0.0)) msg << "lambda must be positive, got " << lambda;
  else if (!(kappa >= 0.0)) msg << "kappa must be non-negative, got " << kappa;
  else if (!(gamma_total >= 0.0)) msg << "gamma must be non-negative, got " << gamma_total;
  else if (kind == ModelKind::ZenoBaseline && !(omega_z > 0.0)) msg << "omega_z must be positive, got " << omega_z;
  else return;
  throw ParameterError(msg.str());
}

double ModelSpec::t_final() const {
  if (kind == ModelKind::ZenoBaseline) return std::numbers::pi / omega_z;
  return pulse.params().t_final;
}

double ModelSpec::omega1(double t) const { return kind == ModelKind::ZenoBaseline ? omega_z : pulse.omega1(t); }

double ModelSpec::omega2(double t) const { return kind == ModelKind::ZenoBaseline ? omega_z : pulse.omega2(t); }

// ---- bases -----------------------------------------------------------------

BasisCatalog basis_catalog(ModelKind kind) {
  switch (kind) {
    case ModelKind::TwoAtom:
      return {{"psi1", "psi2", "psi3", "psi4", "psi5", "leak_gg0"}, kTwoAtomDim, {5}, 0, 4};
    case ModelKind::ThreeAtom:
      return {{"phi1", "phi2", "phi3", "phi4", "phi5", "phi6", "phi7", "leak_gpgpgm0", "leak_gpgmgm0"},
              kThreeAtomDim,
              {7, 8},
              0,
              6};
    case ModelKind::ZenoBaseline:
      return {{"psi0", "phi1", "psi5"}, kZenoDim, {}, 0, 2};
  }
  throw ParameterError("basis_catalog: unknown model kind");
}

Op coupling_hamiltonian(ModelKind kind, double lambda) {
  require_cavity_model(kind, "coupling_hamiltonian");
  if (kind == ModelKind::TwoAtom) {
    Op h(5);
    h.set_hermitian_pair(1, 2, lambda);  // |e>1<g| a
    h.set_hermitian_pair(3, 2, lambda);  // |e>2<g| a
    return h;
  }
  Op h(7);
  h.set_hermitian_pair(1, 2, lambda);  // |e>1<g+| a+
  h.set_hermitian_pair(3, 2, lambda);  // |e>2<g+| a+
  h.set_hermitian_pair(3, 4, lambda);  // |e>2<g-| a-
  h.set_hermitian_pair(5, 4, lambda);  // |e>3<g-| a-
  return h;
}

std::vector<Op> drive_channels(ModelKind kind) {
  require_cavity_model(kind, "drive_channels");
  const std::size_t n = kind == ModelKind::TwoAtom ? 5 : 7;
  Op first(n), second(n);
  first.set_hermitian_pair(1, 0, 1.0);
  second.set_hermitian_pair(n - 2, n - 1, 1.0);
  return {first, second};
}

TimeDependentHamiltonian hamiltonian(const ModelSpec& m) {
  m.validate();
  const BasisCatalog basis = basis_catalog(m.kind);
  const std::size_t n = basis.dim;

  if (m.kind == ModelKind::ZenoBaseline) {
    Op h(n);
    h.set_hermitian_pair(0, 1, m.omega_z / sqrt2);
    h.set_hermitian_pair(2, 1, m.omega_z / sqrt2);
    return TimeDependentHamiltonian(h);
  }

  const Op hac = coupling_hamiltonian(m.kind, m.lambda);
  Op constant(n);
  for (std::size_t r = 0; r < hac.dim(); ++r)
    for (std::size_t c = 0; c < hac.dim(); ++c) constant(r, c) = hac(r, c);

  const std::size_t active = hac.dim();
  Op drive1(n), drive2(n);
  drive1.set_hermitian_pair(1, 0, 1.0);
  drive2.set_hermitian_pair(active - 2, active - 1, 1.0);

  TimeDependentHamiltonian h(constant);
  const PulseSchedule pulse = m.pulse;
  h.add_term(drive1, [pulse](double t) { return pulse.omega1(t); });
  h.add_term(drive2, [pulse](double t) { return pulse.omega2(t); });
  return h;
}

Op h_total(const ModelSpec& m, double t) { return hamiltonian(m)(t); }

// ---- Zeno partition --------------------------------------------------------

const ZenoGroup& ZenoDecomposition::group_at(double eigenvalue, double tol) const {
  for (const auto& g : groups)
    if (std::abs(g.eigenvalue - eigenvalue) <= tol) return g;
  throw ParameterError("ZenoDecomposition: no group at eigenvalue " + std::to_string(eigenvalue));
}

Op ZenoDecomposition::projector(const ZenoGroup& g) const {
  Op p(g.states.front().dim());
  for (const auto& s : g.states) p += outer(s, s);
  return p;
}

ZenoDecomposition zeno_partition(const Op& h_ac, double lambda, std::span<const Op> channels) {
  if (!(lambda > 0.0)) throw ParameterError("zeno_partition: lambda must be positive");
  const EigenSystem es = eig_hermitian(h_ac);
  const double tol = 1e-9 * lambda;

  ZenoDecomposition out;
  out.eigenvalues = es.values;
  out.eigenvectors = es.vectors;
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    if (out.groups.empty() || std::abs(es.values[k] - out.groups.back().eigenvalue) > tol) {
      out.groups.push_back({es.values[k], {}});
    }
    out.groups.back().states.push_back(es.vectors[k]);
  }
  // Report each group at the mean of its members.
  std::size_t k = 0;
  for (auto& g : out.groups) {
    double sum = 0.0;
    for (std::size_t j = 0; j < g.states.size(); ++j) sum += es.values[k + j];
    g.eigenvalue = sum / static_cast<double>(g.states.size());
    k += g.states.size();
  }

  const std::size_t n = h_ac.dim();
  out.couplings.resize(es.vectors.size());
  for (std::size_t a = 0; a < es.vectors.size(); ++a) {
    out.couplings[a].resize(channels.size());
    for (std::size_t m = 0; m < channels.size(); ++m) {
      if (channels[m].dim() != n) throw DimensionError("zeno_partition: channel dimension mismatch");
      out.couplings[a][m].resize(n);
      for (std::size_t l = 0; l < n; ++l)
        out.couplings[a][m][l] = inner(es.vectors[a], matvec(channels[m], Ket::basis(n, l)));
    }
  }
  return out;
}

// ---- reduced Hamiltonians --------------------------------------------------

Op h_subsystem(const ModelSpec& m, double t) {
  m.validate();
  const double scale = m.kind == ModelKind::ThreeAtom ? sqrt3 : sqrt2;
  return stirap_hamiltonian(m.omega1(t), m.omega2(t), scale);
}

TimeDependentHamiltonian subsystem_hamiltonian(const ModelSpec& m) {
  m.validate();
  const double scale = m.kind == ModelKind::ThreeAtom ? sqrt3 : sqrt2;
  Op first(3), second(3);
  first.set_hermitian_pair(0, 1, 1.0 / scale);
  second.set_hermitian_pair(1, 2, 1.0 / scale);
  TimeDependentHamiltonian h{Op(3)};
  const ModelSpec spec = m;
  h.add_term(first, [spec](double t) { return spec.omega1(t); });
  h.add_term(second, [spec](double t) { return spec.omega2(t); });
  return h;
}

std::vector<Ket> rewritten_basis(ModelKind kind) {
  require_cavity_model(kind, "rewritten_basis");
  if (kind == ModelKind::TwoAtom) {
    const std::size_t n = kTwoAtomDim;
    return {Ket::basis(n, 0), Ket::basis(n, 4), combo(n, {{1, -1.0}, {3, 1.0}}, 1.0 / sqrt2),
            combo(n, {{1, 1.0}, {3, 1.0}}, 1.0 / sqrt2), Ket::basis(n, 2)};
  }
  const std::size_t n = kThreeAtomDim;
  return {Ket::basis(n, 0), Ket::basis(n, 6), combo(n, {{1, 1.0}, {3, -1.0}, {5, 1.0}}, 1.0 / sqrt3),
          combo(n, {{1, -1.0}, {5, 1.0}}, 1.0 / sqrt2), combo(n, {{2, -1.0}, {4, 1.0}}, 1.0 / sqrt2)};
}

std::vector<std::string> rewritten_labels(ModelKind kind) {
  require_cavity_model(kind, "rewritten_labels");
  if (kind == ModelKind::TwoAtom) return {"psi1", "psi5", "phi1", "mu2", "psi3"};
  return {"phi1", "phi7", "Phi1", "mu-", "mu+"};
}

Op h_rewritten_two_atom(double omega1, double omega2, double lambda) {
  Op h(5);
  h.set_hermitian_pair(0, 2, -omega1 / sqrt2);
  h.set_hermitian_pair(1, 2, omega2 / sqrt2);
  h.set_hermitian_pair(0, 3, omega1 / sqrt2);
  h.set_hermitian_pair(1, 3, omega2 / sqrt2);
  h.set_hermitian_pair(4, 3, sqrt2 * lambda);
  return h;
}

Op h_rewritten(const ModelSpec& m, double t) {
  m.validate();
  require_cavity_model(m.kind, "h_rewritten");
  const double w1 = m.omega1(t), w2 = m.omega2(t);
  if (m.kind == ModelKind::TwoAtom) return h_rewritten_two_atom(w1, w2, m.lambda);
  Op h(5);
  h.set_hermitian_pair(2, 0, w1 / sqrt3);
  h.set_hermitian_pair(2, 1, w2 / sqrt3);
  h.set_hermitian_pair(3, 0, -w1 / sqrt2);
  h.set_hermitian_pair(3, 1, w2 / sqrt2);
  h.set_hermitian_pair(3, 4, m.lambda);
  return h;
}

Ket to_rewritten(ModelKind kind, const Ket& k) {
  const auto basis = rewritten_basis(kind);
  Ket out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = inner(basis[i], k);
  return out;
}

// ---- dark state and diagnostics -------------------------------------------

Ket dark_state(const ModelSpec& m, double t) {
  m.validate();
  const double w1 = m.omega1(t), w2 = m.omega2(t);
  if (w1 == 0.0 && w2 == 0.0) throw SingularError("dark_state: both pulses vanish");
  const double l = m.lambda;
  switch (m.kind) {
    case ModelKind::TwoAtom: {
      Ket k(kTwoAtomDim);
      k[0] = w2;
      k[2] = -w1 * w2 / l;
      k[4] = w1;
      return k.normalized();
    }
    case ModelKind::ThreeAtom: {
      Ket k(kThreeAtomDim);
      k[0] = w2;
      k[2] = -w1 * w2 / l;
      k[4] = w1 * w2 / l;
      k[6] = -w1;
      return k.normalized();
    }
    case ModelKind::ZenoBaseline: {
      Ket k(kZenoDim);
      k[0] = w2;
      k[2] = -w1;
      return k.normalized();
    }
  }
  throw ParameterError("dark_state: unknown model kind");
}

DiagnosticSet diagnostics(double omega1, double omega2, double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("diagnostics: lambda must be positive");
  const double o1 = omega1 * omega1, o2 = omega2 * omega2, l2 = lambda * lambda;
  const double p = omega1 * omega2 / lambda;
  DiagnosticSet d;
  d.n2 = std::sqrt(o1 + o2 + p * p);
  d.n3 = std::sqrt(o1 + o2 + 2.0 * p * p);
  d.r = d.n2 > 0.0 ? omega1 * omega2 / (d.n2 * lambda) : 0.0;
  d.varpi = std::sqrt((o1 - o2) * (o1 - o2) + 4.0 * l2 * l2);
  d.delta_e = gap_delta_e(omega1, omega2, lambda);
  d.vartheta = sqrt2 * d.delta_e;
  d.varsigma = lambda * (o1 - o2);
  d.tau = o1 == o2 ? std::numeric_limits<double>::infinity() : std::abs((2.0 * l2 + d.varpi) / (o1 - o2));
  return d;
}

ThetaStates theta_pm_states(double omega1, double omega2, double lambda) {
  const DiagnosticSet d = diagnostics(omega1, omega2, lambda);
  if (std::abs(d.varsigma) <= 1e-14 * std::max(1.0, lambda * (omega1 * omega1 + omega2 * omega2)))
    throw SingularError("theta_pm_states: W1^2 == W2^2 makes the closed form singular; use theta_pm_states_numeric");
  const double l2 = lambda * lambda;
  const double th2 = d.vartheta * d.vartheta;
  const double c_psi1 = omega1 / d.varsigma * (th2 / 2.0 - (omega2 * omega2 + 2.0 * l2));
  const double c_psi5 = -omega2 / d.varsigma * (th2 / 2.0 - (omega1 * omega1 + 2.0 * l2));
  const double c_phi1 = d.vartheta * (2.0 * l2 + d.varpi) / (2.0 * d.varsigma);
  const double c_mu2 = d.vartheta / (2.0 * lambda);
  ThetaStates out;
  out.plus = Ket{c_psi1, c_psi5, c_phi1, c_mu2, 1.0}.normalized();
  out.minus = Ket{c_psi1, c_psi5, -c_phi1, -c_mu2, 1.0}.normalized();
  return out;
}

ThetaStates theta_pm_states_numeric(double omega1, double omega2, double lambda) {
  const EigenSystem es = eig_hermitian(h_rewritten_two_atom(omega1, omega2, lambda));
  const double gap = gap_delta_e(omega1, omega2, lambda);
  auto closest = [&](double target) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < es.values.size(); ++k)
      if (std::abs(es.values[k] - target) < std::abs(es.values[best] - target)) best = k;
    Ket v = es.vectors[best];
    // Match the closed-form convention: psi3 component real positive.
    const cplx anchor = v[4];
    if (std::abs(anchor) > 0.0) v *= std::conj(anchor) / std::abs(anchor);
    return v;
  };
  return {closest(gap), closest(-gap)};
}

Ket zeno_baseline_state(double omega1, double omega2, double t) {
  const double chi2 = (omega1 * omega1 + omega2 * omega2) / 2.0;
  if (!(chi2 > 0.0)) throw ParameterError("zeno_baseline_state: pulses must not both vanish");
  const double chi = std::sqrt(chi2);
  const double c = std::cos(chi * t), s = std::sin(chi * t);
  Ket k(kZenoDim);
  k[0] = (omega1 * omega1 * c + omega2 * omega2) / (2.0 * chi2);
  k[1] = cplx(0.0, -omega1 / (sqrt2 * chi) * s);
  k[2] = omega1 * omega2 * (c - 1.0) / (2.0 * chi2);
  return k;
}

Ket zeno_baseline_state(double omega_z, double t) {
  if (!(omega_z > 0.0)) throw ParameterError("zeno_baseline_state: omega_z must be positive");
  return zeno_baseline_state(omega_z, omega_z, t);
}

// ---- dissipation -----------------------------------------------------------

std::vector<Op> lindblad_ops(const ModelSpec& m) {
  m.validate();
  const double k = std::sqrt(m.kappa);
  const double g = std::sqrt(m.gamma_total / 2.0);
  switch (m.kind) {
    case ModelKind::TwoAtom: {
      const std::size_t n = kTwoAtomDim;
      return {single_entry(n, 5, 2, k), single_entry(n, 0, 1, g), single_entry(n, 4, 3, g),
              single_entry(n, 5, 1, g), single_entry(n, 5, 3, g)};
    }
    case ModelKind::ThreeAtom: {
      const std::size_t n = kThreeAtomDim;
      return {single_entry(n, 7, 2, k), single_entry(n, 8, 4, k), single_entry(n, 0, 1, g),
              single_entry(n, 6, 5, g), single_entry(n, 7, 1, g), single_entry(n, 8, 5, g),
              single_entry(n, 7, 3, g), single_entry(n, 8, 3, g)};
    }
    case ModelKind::ZenoBaseline:
      return {};
  }
  return {};
}

// ---- analysis states -------------------------------------------------------

std::vector<NamedState> analysis_states(ModelKind kind) {
  require_cavity_model(kind, "analysis_states");
  if (kind == ModelKind::TwoAtom) {
    const std::size_t n = kTwoAtomDim;
    return {{"phi1", combo(n, {{1, -1.0}, {3, 1.0}}, 1.0 / sqrt2)},
            {"phi2", combo(n, {{1, 1.0}, {2, sqrt2}, {3, 1.0}}, 0.5)},
            {"phi3", combo(n, {{1, 1.0}, {2, -sqrt2}, {3, 1.0}}, 0.5)},
            {"mu1", Ket::basis(n, 2)},
            {"mu2", combo(n, {{1, 1.0}, {3, 1.0}}, 1.0 / sqrt2)}};
  }
  const std::size_t n = kThreeAtomDim;
  const double q = 1.0 / (2.0 * sqrt3);
  return {{"Phi1", combo(n, {{1, 1.0}, {3, -1.0}, {5, 1.0}}, 1.0 / sqrt3)},
          {"Phi2", combo(n, {{1, -1.0}, {2, -1.0}, {4, 1.0}, {5, 1.0}}, 0.5)},
          {"Phi3", combo(n, {{1, -1.0}, {2, 1.0}, {4, -1.0}, {5, 1.0}}, 0.5)},
          {"Phi4", combo(n, {{1, 1.0}, {2, sqrt3}, {3, 2.0}, {4, sqrt3}, {5, 1.0}}, q)},
          {"Phi5", combo(n, {{1, 1.0}, {2, -sqrt3}, {3, 2.0}, {4, -sqrt3}, {5, 1.0}}, q)},
          {"mu+", combo(n, {{2, -1.0}, {4, 1.0}}, 1.0 / sqrt2)},
          {"mu-", combo(n, {{1, -1.0}, {5, 1.0}}, 1.0 / sqrt2)}};
}

Ket analysis_state(ModelKind kind, std::string_view label) {
  for (auto& s : analysis_states(kind))
    if (s.label == label) return s.ket;
  throw ParameterError("analysis_state: unknown label '" + std::string(label) + "'");
}

}  // namespace zenosim
