#include <catch2/catch_amalgamated.hpp>

#include "lebdecomp/psd.hpp"
#include "support.hpp"

using namespace lebdecomp;
using testsupport::Rng;
using testsupport::diag;

namespace {

Matrix all_ones2() {
  Matrix m(2, 2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("tolerance validation") {
  Tolerance t;
  CHECK_NOTHROW(t.validate());
  t.rel_rank = 1.0;
  CHECK_THROWS_AS(t.validate(), Error);
  t = Tolerance{};
  t.psd_slack = -1e-3;
  CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("make_psd validates and spectralizes") {
  const PsdMatrix id = make_psd(Matrix::identity(2));
  CHECK(id.rank() == 2);
  CHECK(id.eigenvalues() == std::vector<double>{1.0, 1.0});

  // eigenvalues of the all-ones matrix: roots of lambda^2 - 2 lambda
  const PsdMatrix ones = make_psd(all_ones2());
  CHECK(ones.rank() == 1);
  CHECK(std::abs(ones.eigenvalues()[0] - 2.0) < 1e-12);
  CHECK(std::abs(ones.eigenvalues()[1]) < 1e-12);

  Matrix upper(2, 2);
  upper(0, 1) = 1.0;
  CHECK_THROWS_AS(make_psd(upper), Error);
  try {
    make_psd(upper);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_hermitian);
  }

  CHECK_THROWS_AS(make_psd(Matrix(2, 3)), Error);
  CHECK_THROWS_AS(make_psd(diag({1.0, -1.0})), Error);
  try {
    make_psd(diag({1.0, -1.0}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_psd);
  }

  // negativity within slack is clamped, not rejected
  const PsdMatrix clamped = make_psd(diag({1.0, -1e-10}));
  CHECK(clamped.eigenvalues()[1] == 0.0);
  CHECK(clamped.rank() == 1);

  const PsdMatrix zero = make_psd(Matrix(3, 3));
  CHECK(zero.rank() == 0);
  CHECK(zero.lambda_max() == 0.0);
}

TEST_CASE("sqrt_psd examples") {
  const PsdMatrix a = make_psd(diag({4.0, 9.0}));
  const PsdMatrix r = sqrt_psd(a);
  CHECK(testsupport::max_abs_diff(r.entries(), diag({2.0, 3.0})) < 1e-12);

  CHECK(sqrt_psd(make_psd(Matrix(2, 2))).frobenius_norm() == 0.0);

  // all-ones = 2P with P rank-1; square root is sqrt(2) P = ones / sqrt(2)
  const PsdMatrix ones = make_psd(all_ones2());
  CHECK(testsupport::max_abs_diff(sqrt_psd(ones).entries(),
                                  all_ones2() * (1.0 / std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("pinv examples") {
  CHECK(testsupport::max_abs_diff(pinv(make_psd(diag({2.0, 0.0}))).entries(),
                                  diag({0.5, 0.0})) < 1e-14);
  CHECK(testsupport::max_abs_diff(pinv(make_psd(Matrix::identity(3))).entries(),
                                  Matrix::identity(3)) < 1e-14);
  // eigenvalue 2 inverted on its rank-1 eigenspace
  CHECK(testsupport::max_abs_diff(pinv(make_psd(all_ones2())).entries(),
                                  all_ones2() * 0.25) < 1e-14);
}

TEST_CASE("kernel and range bases") {
  const PsdMatrix a = make_psd(diag({1.0, 0.0}));
  const SubspaceBasis ker = kernel_basis(a);
  const SubspaceBasis ran = range_basis(a);
  REQUIRE(ker.dim() == 1);
  REQUIRE(ran.dim() == 1);
  CHECK(std::abs(std::abs(ker.vectors(1, 0)) - 1.0) < 1e-14);
  CHECK(std::abs(ker.vectors(0, 0)) < 1e-14);
  CHECK(std::abs(std::abs(ran.vectors(0, 0)) - 1.0) < 1e-14);

  CHECK(kernel_basis(make_psd(Matrix::identity(4))).dim() == 0);

  // kernel of the all-ones matrix is spanned by (1,-1)/sqrt(2)
  const SubspaceBasis k1 = kernel_basis(make_psd(all_ones2()));
  REQUIRE(k1.dim() == 1);
  Matrix expected(2, 2);
  expected(0, 0) = 0.5;
  expected(0, 1) = -0.5;
  expected(1, 0) = -0.5;
  expected(1, 1) = 0.5;
  CHECK(testsupport::max_abs_diff(projection_matrix(k1), expected) < 1e-12);
}

TEST_CASE("project_onto examples") {
  Matrix e1(2, 1);
  e1(0, 0) = 1.0;
  CHECK(testsupport::max_abs_diff(project_onto(e1), diag({1.0, 0.0})) < 1e-14);

  CHECK(project_onto(Matrix(2, 0)).frobenius_norm() == 0.0);

  Matrix cols(2, 2);
  cols(0, 0) = 1.0;
  cols(1, 0) = 1.0;
  cols(0, 1) = 2.0;
  cols(1, 1) = 2.0;
  CHECK(testsupport::max_abs_diff(project_onto(cols), all_ones2() * 0.5) < 1e-12);
}

TEST_CASE("psd_leq examples") {
  const Tolerance tol;
  const PsdMatrix id = make_psd(Matrix::identity(2));
  CHECK(psd_leq(id, make_psd(Matrix::identity(2) * 2.0), tol));
  CHECK_FALSE(psd_leq(make_psd(diag({1.0, 0.0})), make_psd(diag({0.0, 1.0})), tol));
  CHECK(psd_leq(id, id, tol));
  CHECK_THROWS_AS(psd_leq(id, make_psd(Matrix::identity(3)), tol), Error);
}

TEST_CASE("spectral invariants on a random corpus") {
  Rng rng(101);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim_dist(rng);
    const PsdMatrix a = testsupport::random_psd_any_rank(n, rng);
    const double scale = 1e-8 * (1.0 + a.lambda_max());

    // spectral round trip
    Matrix rec = a.eigenvectors();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) rec(i, k) *= a.eigenvalues()[k];
    CHECK((rec * a.eigenvectors().adjoint() - a.entries()).frobenius_norm() <= scale);

    // sqrt squares back, commutes
    const PsdMatrix r = sqrt_psd(a);
    CHECK((r.entries() * r.entries() - a.entries()).frobenius_norm() <= scale);
    CHECK((r.entries() * a.entries() - a.entries() * r.entries()).frobenius_norm() <= scale);
    CHECK(r.rank() == a.rank());

    // Penrose identities and range projection
    const PsdMatrix p = pinv(a);
    const Matrix apa = a.entries() * p.entries() * a.entries();
    const Matrix pap = p.entries() * a.entries() * p.entries();
    CHECK((apa - a.entries()).frobenius_norm() <= scale);
    CHECK((pap - p.entries()).frobenius_norm() <= 1e-8 * (1.0 + p.lambda_max()));
    const Matrix range_proj = projection_matrix(range_basis(a));
    CHECK((p.entries() * a.entries() - range_proj).frobenius_norm() <= 1e-7);

    // kernel/range orthogonal and jointly complete
    const SubspaceBasis ker = kernel_basis(a);
    const SubspaceBasis ran = range_basis(a);
    CHECK(ker.dim() + ran.dim() == n);
    if (ker.dim() > 0 && ran.dim() > 0)
      CHECK((ker.vectors.adjoint() * ran.vectors).frobenius_norm() < 1e-12 * n);
    const Matrix both = projection_matrix(ker) + projection_matrix(ran);
    CHECK((both - Matrix::identity(n)).frobenius_norm() < 1e-11 * n);

    // A v small for kernel columns
    for (std::size_t k = 0; k < ker.dim(); ++k)
      CHECK(norm2(a.entries() * ker.vectors.col(k)) <= 10.0 * a.cutoff() + 1e-13);
  }
}

TEST_CASE("project_onto is idempotent and Hermitian on random spans") {
  Rng rng(103);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 16);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = dim_dist(rng);
    std::uniform_int_distribution<std::size_t> col_dist(0, 2 * n);
    std::size_t c = col_dist(rng);
    Matrix s = testsupport::random_matrix(n, c, rng);
    // make some spans rank-deficient by duplicating columns
    if (c >= 2 && trial % 3 == 0)
      for (std::size_t i = 0; i < n; ++i) s(i, c - 1) = 2.0 * s(i, 0);
    const Matrix p = project_onto(s);
    CHECK((p - p.adjoint()).frobenius_norm() <= 1e-9);
    CHECK((p * p - p).frobenius_norm() <= 1e-9);
    // P fixes the span
    if (c > 0) CHECK((p * s - s).frobenius_norm() <= 1e-9 * (1.0 + s.frobenius_norm()));
  }
}

TEST_CASE("rectangular helpers") {
  Rng rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> d(1, 10);
    const std::size_t rows = d(rng), cols = d(rng);
    const Matrix m = testsupport::random_matrix(rows, cols, rng);
    const Matrix mp = pinv_rect(m);
    CHECK((m * mp * m - m).frobenius_norm() <= 1e-9 * (1.0 + m.frobenius_norm()));
    CHECK((mp * m * mp - mp).frobenius_norm() <= 1e-9 * (1.0 + mp.frobenius_norm()));
    CHECK(matrix_rank(m) == std::min(rows, cols));  // random matrices have full rank
    CHECK(sigma_max(m) >= 0.0);
  }
  CHECK(matrix_rank(Matrix(3, 0)) == 0);
  CHECK(sigma_max(Matrix(0, 0)) == 0.0);
}

TEST_CASE("scale_psd preserves eigenvectors and scales eigenvalues") {
  Rng rng(109);
  const PsdMatrix a = testsupport::random_psd(6, 4, rng);
  const PsdMatrix b = scale_psd(a, 3.0);
  CHECK((b.entries() - a.entries() * 3.0).frobenius_norm() < 1e-12 * (1.0 + a.lambda_max()));
  CHECK(b.rank() == a.rank());
  CHECK_THROWS_AS(scale_psd(a, -1.0), Error);
}
