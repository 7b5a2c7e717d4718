#include "zenosim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "zenosim/errors.hpp"

namespace zenosim {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    std::ostringstream msg;
    msg << where << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(msg.str());
  }
}

void require_dim(std::size_t dim, const char* where) {
  if (dim == 0 || dim > kMaxDim) {
    std::ostringstream msg;
    msg << where << ": dimension " << dim << " outside [1, " << kMaxDim << "]";
    throw DimensionError(msg.str());
  }
}

}  // namespace

// ---- Ket -------------------------------------------------------------------

Ket::Ket(std::size_t dim) : amp_(dim) { require_dim(dim, "Ket"); }

Ket::Ket(std::initializer_list<cplx> amps) : amp_(amps) { require_dim(amp_.size(), "Ket"); }

Ket::Ket(std::vector<cplx> amps) : amp_(std::move(amps)) { require_dim(amp_.size(), "Ket"); }

Ket Ket::basis(std::size_t dim, std::size_t index) {
  Ket k(dim);
  if (index >= dim) throw DimensionError("Ket::basis: index out of range");
  k[index] = 1.0;
  return k;
}

double Ket::norm() const {
  double s = 0.0;
  for (const auto& z : amp_) s += std::norm(z);
  return std::sqrt(s);
}

Ket Ket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw SingularError("Ket::normalized: zero vector");
  Ket out = *this;
  out *= 1.0 / n;
  return out;
}

bool Ket::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Ket& Ket::operator+=(const Ket& other) {
  require_same_dim(dim(), other.dim(), "Ket::operator+=");
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += other.amp_[i];
  return *this;
}

Ket& Ket::operator-=(const Ket& other) {
  require_same_dim(dim(), other.dim(), "Ket::operator-=");
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] -= other.amp_[i];
  return *this;
}

Ket& Ket::operator*=(cplx s) {
  for (auto& z : amp_) z *= s;
  return *this;
}

Ket operator+(Ket a, const Ket& b) { return a += b; }
Ket operator-(Ket a, const Ket& b) { return a -= b; }
Ket operator*(cplx s, Ket k) { return k *= s; }

cplx inner(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Ket& k) { return k.norm(); }

// ---- Op --------------------------------------------------------------------

Op::Op(std::size_t dim) : dim_(dim), a_(dim * dim) { require_dim(dim, "Op"); }

Op::Op(std::size_t dim, std::initializer_list<cplx> row_major) : dim_(dim), a_(row_major) {
  require_dim(dim, "Op");
  if (a_.size() != dim * dim) throw DimensionError("Op: entry count does not match dim*dim");
}

Op Op::identity(std::size_t dim) {
  Op id(dim);
  for (std::size_t i = 0; i < dim; ++i) id(i, i) = 1.0;
  return id;
}

Op Op::dagger() const {
  Op out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx Op::trace() const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
  return s;
}

double Op::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double Op::hermitian_deviation() const {
  double dev = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return dev;
}

void Op::set_hermitian_pair(std::size_t r, std::size_t c, cplx v) {
  (*this)(r, c) = v;
  (*this)(c, r) = std::conj(v);
}

Op& Op::operator+=(const Op& other) {
  require_same_dim(dim_, other.dim_, "Op::operator+=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

Op& Op::operator-=(const Op& other) {
  require_same_dim(dim_, other.dim_, "Op::operator-=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

Op& Op::operator*=(cplx s) {
  for (auto& z : a_) z *= s;
  return *this;
}

Op operator+(Op a, const Op& b) { return a += b; }
Op operator-(Op a, const Op& b) { return a -= b; }
Op operator*(cplx s, Op a) { return a *= s; }

Op operator*(const Op& a, const Op& b) {
  require_same_dim(a.dim(), b.dim(), "Op::operator*");
  const std::size_t n = a.dim();
  Op out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

Ket operator*(const Op& a, const Ket& k) { return matvec(a, k); }

Ket matvec(const Op& a, const Ket& k) {
  require_same_dim(a.dim(), k.dim(), "matvec");
  const std::size_t n = a.dim();
  Ket out(n);
  for (std::size_t r = 0; r < n; ++r) {
    cplx s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s += a(r, c) * k[c];
    out[r] = s;
  }
  return out;
}

Op dagger(const Op& a) { return a.dagger(); }

Op outer(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "outer");
  Op out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) out(r, c) = a[r] * std::conj(b[c]);
  return out;
}

Op commutator(const Op& a, const Op& b) { return a * b - b * a; }

cplx expectation(const Op& a, const Ket& psi) { return inner(psi, matvec(a, psi)); }

double max_abs_diff(const Op& a, const Op& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

double max_abs_diff(const Ket& a, const Ket& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

Op compress(const Op& a, std::span<const Ket> columns) {
  const std::size_t m = columns.size();
  Op out(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Ket aw = matvec(a, columns[j]);
    for (std::size_t i = 0; i < m; ++i) out(i, j) = inner(columns[i], aw);
  }
  return out;
}

// ---- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(Op rho) : rho_(std::move(rho)) {
  const double dev = rho_.hermitian_deviation();
  if (dev > 1e-10) throw ParameterError("DensityMatrix: not Hermitian (deviation " + std::to_string(dev) + ")");
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > 1e-8) throw ParameterError("DensityMatrix: trace " + std::to_string(tr) + " != 1");
  if (min_eigenvalue() < -1e-7) throw ParameterError("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Ket& psi) { return DensityMatrix(outer(psi, psi)); }

DensityMatrix DensityMatrix::unchecked(Op rho) {
  DensityMatrix d;
  d.rho_ = std::move(rho);
  return d;
}

double DensityMatrix::min_eigenvalue() const {
  // Symmetrize first so integrator round-off does not trip the Hermitian check.
  Op sym = 0.5 * (rho_ + rho_.dagger());
  return eig_hermitian(sym).values.front();
}

// ---- Jacobi eigensolver ----------------------------------------------------

namespace {

double off_diagonal_norm(const Op& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// A <- U^dagger A U and V <- V U for the unitary acting on coordinates (p, q):
//   U_pp = c, U_pq = s, U_qp = -s e^{-i phi}, U_qq = c e^{-i phi}
// which zeroes A_pq when A_pq = r e^{i phi}.
void rotate(Op& a, Op& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cplx phase = apq / r;  // e^{i phi}
  const cplx phase_c = std::conj(phase);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx u_pp = c;
  const cplx u_pq = s;
  const cplx u_qp = -s * phase_c;
  const cplx u_qq = c * phase_c;
  const std::size_t n = a.dim();

  // Columns: A <- A U
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  // Rows: A <- U^dagger A
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
}

}  // namespace

EigenSystem eig_hermitian(const Op& a_in, double hermitian_tol) {
  const std::size_t n = a_in.dim();
  if (n == 0) throw DimensionError("eig_hermitian: empty matrix");

  double scale = 1.0;
  for (const auto& z : a_in.data()) scale = std::max(scale, std::abs(z));
  const double dev = a_in.hermitian_deviation();
  if (dev > hermitian_tol * scale) {
    std::ostringstream msg;
    msg << "eig_hermitian: input not Hermitian, max |A - A^dagger| = " << dev;
    throw NotHermitianError(msg.str(), dev);
  }

  // Work on the exactly-Hermitian part.
  Op a = 0.5 * (a_in + a_in.dagger());
  Op v = Op::identity(n);

  const double target = 1e-14 * std::max(1.0, a.frobenius_norm());
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(a(idx, idx).real());
    Ket vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v(k, idx);

    std::size_t big = 0;
    double big_mag = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double mag = std::abs(vec[k]);
      if (mag > big_mag + 1e-12) {
        big = k;
        big_mag = mag;
      }
    }
    vec *= std::conj(vec[big]) / big_mag;
    vec[big] = big_mag;
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace zenosim
