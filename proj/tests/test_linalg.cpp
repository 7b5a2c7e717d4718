#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "zenosim/errors.hpp"
#include "zenosim/linalg.hpp"

using namespace zenosim;

namespace {

Op random_hermitian(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Op a(n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = g(rng);
    for (std::size_t c = r + 1; c < n; ++c) a.set_hermitian_pair(r, c, cplx(g(rng), g(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("ket basics") {
  const Ket k = Ket::basis(4, 2);
  CHECK(k.dim() == 4);
  CHECK(k[2] == cplx(1.0));
  CHECK(k.is_normalized());
  const Ket s = Ket{3.0, cplx(0.0, 4.0)};
  CHECK(s.norm() == doctest::Approx(5.0));
  CHECK(s.normalized().is_normalized(1e-15));
  CHECK(std::abs(inner(s, s) - cplx(25.0)) < 1e-14);
  CHECK(std::abs(inner(Ket{cplx(0, 1)}, Ket{1.0}) - cplx(0, -1)) < 1e-15);
  CHECK_THROWS_AS(inner(Ket(2), Ket(3)), DimensionError);
}

TEST_CASE("operator algebra") {
  std::mt19937_64 rng(7);
  const Op a = random_hermitian(rng, 5);
  const Op b = random_hermitian(rng, 5);
  CHECK(a.is_hermitian());
  CHECK(max_abs_diff(dagger(a * b), b * a) < 1e-13);
  CHECK((commutator(a, a)).frobenius_norm() < 1e-13);
  CHECK(std::abs(Op::identity(5).trace() - cplx(5.0)) < 1e-15);

  Op nh(2);
  nh(0, 1) = 1.0;
  CHECK(nh.hermitian_deviation() == doctest::Approx(1.0));
  CHECK_THROWS_AS(a * Op(3), DimensionError);

  const Ket x = Ket{1.0, cplx(0, 1), 2.0, 0.0, -1.0};
  CHECK(max_abs_diff(matvec(a, x), a * x) == 0.0);
  CHECK(std::abs(expectation(a, x).imag()) < 1e-13);
}

TEST_CASE("compress onto an orthonormal set") {
  std::mt19937_64 rng(11);
  const Op a = random_hermitian(rng, 4);
  std::vector<Ket> cols;
  for (std::size_t i = 0; i < 4; ++i) cols.push_back(Ket::basis(4, i));
  CHECK(max_abs_diff(compress(a, cols), a) < 1e-15);
  const std::vector<Ket> two = {Ket::basis(4, 1), Ket::basis(4, 3)};
  const Op c = compress(a, two);
  CHECK(c.dim() == 2);
  CHECK(std::abs(c(0, 1) - a(1, 3)) < 1e-15);
}

TEST_CASE("jacobi eigensolver properties over seeded random matrices") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> dims(1, 9);
  double worst_residual = 0.0, worst_ortho = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = dims(rng);
    const Op a = random_hermitian(rng, n, trial % 3 == 0 ? 10.0 : 1.0);
    const EigenSystem es = eig_hermitian(a);
    REQUIRE(es.values.size() == n);
    REQUIRE(std::is_sorted(es.values.begin(), es.values.end()));
    const double scale = std::max(1.0, a.frobenius_norm());

    double trace = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      trace += es.values[k];
      const Ket r = a * es.vectors[k] - cplx(es.values[k]) * es.vectors[k];
      worst_residual = std::max(worst_residual, r.norm() / scale);
      for (std::size_t l = 0; l < n; ++l) {
        const cplx ov = inner(es.vectors[k], es.vectors[l]);
        worst_ortho = std::max(worst_ortho, std::abs(ov - cplx(k == l ? 1.0 : 0.0)));
      }
      // Phase convention: the largest-magnitude component is real and positive.
      std::size_t big = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (std::abs(es.vectors[k][i]) > std::abs(es.vectors[k][big]) + 1e-12) big = i;
      CHECK(es.vectors[k][big].real() > 0.0);
      CHECK(std::abs(es.vectors[k][big].imag()) < 1e-12);
    }
    CHECK(trace == doctest::Approx(a.trace().real()).epsilon(1e-10).scale(scale));
  }
  CHECK(worst_residual < 1e-12);
  CHECK(worst_ortho < 1e-12);
}

TEST_CASE("jacobi handles degenerate and diagonal input") {
  const EigenSystem id = eig_hermitian(Op::identity(4));
  for (double v : id.values) CHECK(v == doctest::Approx(1.0));
  Op d(3);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  const EigenSystem es = eig_hermitian(d);
  CHECK(es.values == std::vector<double>{-1.0, 2.0, 3.0});
  CHECK(es.vectors[0] == Ket::basis(3, 1));
}

TEST_CASE("jacobi rejects non-hermitian input") {
  Op a(2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(a), NotHermitianError);
  try {
    eig_hermitian(a);
  } catch (const NotHermitianError& e) {
    CHECK(e.max_deviation() == doctest::Approx(1.0));
  }
}

TEST_CASE("density matrix validation") {
  const Ket psi = Ket{1.0, cplx(0, 1)}.normalized();
  const DensityMatrix rho = DensityMatrix::pure(psi);
  CHECK(rho.trace() == doctest::Approx(1.0));
  CHECK(rho.min_eigenvalue() > -1e-14);

  Op bad_trace = Op::identity(2);
  CHECK_THROWS_AS(DensityMatrix{bad_trace}, ParameterError);
  Op negative(2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, ParameterError);
  Op skew(2);
  skew(0, 0) = 1.0;
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{skew}, ParameterError);
}
