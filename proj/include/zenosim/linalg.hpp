#pragma once

// Dense complex linear algebra for the small Hilbert spaces used here (dim <= 16).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zenosim {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxDim = 16;

class Ket {
public:
  Ket() = default;
  explicit Ket(std::size_t dim);
  Ket(std::initializer_list<cplx> amps);
  explicit Ket(std::vector<cplx> amps);

  /// Unit vector |index> in a dim-dimensional space.
  static Ket basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amp_.size(); }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }
  std::span<const cplx> amplitudes() const noexcept { return amp_; }
  std::span<cplx> amplitudes() noexcept { return amp_; }

  double norm() const;
  Ket normalized() const;
  bool is_normalized(double tol = 1e-8) const;

  Ket& operator+=(const Ket& other);
  Ket& operator-=(const Ket& other);
  Ket& operator*=(cplx s);

  friend bool operator==(const Ket&, const Ket&) = default;

private:
  std::vector<cplx> amp_;
};

Ket operator+(Ket a, const Ket& b);
Ket operator-(Ket a, const Ket& b);
Ket operator*(cplx s, Ket k);

/// <a|b>, antilinear in the first argument.
cplx inner(const Ket& a, const Ket& b);
double norm(const Ket& k);

/// Row-major dense square matrix.
class Op {
public:
  Op() = default;
  explicit Op(std::size_t dim);
  Op(std::size_t dim, std::initializer_list<cplx> row_major);

  static Op zero(std::size_t dim) { return Op(dim); }
  static Op identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  std::span<const cplx> data() const noexcept { return a_; }
  std::span<cplx> data() noexcept { return a_; }

  Op dagger() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// max_ij |A_ij - conj(A_ji)|
  double hermitian_deviation() const;
  bool is_hermitian(double tol = 1e-12) const { return hermitian_deviation() <= tol; }

  /// Sets A(r,c) = v and A(c,r) = conj(v).
  void set_hermitian_pair(std::size_t r, std::size_t c, cplx v);

  Op& operator+=(const Op& other);
  Op& operator-=(const Op& other);
  Op& operator*=(cplx s);

  friend bool operator==(const Op&, const Op&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

Op operator+(Op a, const Op& b);
Op operator-(Op a, const Op& b);
Op operator*(cplx s, Op a);
Op operator*(const Op& a, const Op& b);
Ket operator*(const Op& a, const Ket& k);

Ket matvec(const Op& a, const Ket& k);
Op dagger(const Op& a);
/// |a><b|
Op outer(const Ket& a, const Ket& b);
/// [a, b] = ab - ba
Op commutator(const Op& a, const Op& b);
/// <psi|A|psi>
cplx expectation(const Op& a, const Ket& psi);
double max_abs_diff(const Op& a, const Op& b);
double max_abs_diff(const Ket& a, const Ket& b);

/// W^dagger A W for an isometry given by its columns (each a ket in A's space).
Op compress(const Op& a, std::span<const Ket> columns);

/// Density operator with the physical-state invariants checked on construction.
class DensityMatrix {
public:
  DensityMatrix() = default;
  /// Throws ParameterError if `rho` is not Hermitian within 1e-10, has trace off
  /// by more than 1e-8, or has an eigenvalue below -1e-7.
  explicit DensityMatrix(Op rho);

  static DensityMatrix pure(const Ket& psi);
  /// Wraps without validation; used by integrators that monitor drift themselves.
  static DensityMatrix unchecked(Op rho);

  std::size_t dim() const noexcept { return rho_.dim(); }
  const Op& op() const noexcept { return rho_; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return rho_(r, c); }
  double trace() const { return rho_.trace().real(); }
  double min_eigenvalue() const;

private:
  Op rho_;
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  std::vector<Ket> vectors;    // orthonormal, vectors[k] pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Each eigenvector is phase-fixed so its largest-magnitude component is real
/// and positive (the first such component on ties). Throws NotHermitianError if
/// the input deviates from Hermitian by more than `hermitian_tol` (scaled by
/// max(1, max|A_ij|)).
EigenSystem eig_hermitian(const Op& a, double hermitian_tol = 1e-10);

}  // namespace zenosim
