#include <catch2/catch_amalgamated.hpp>

#include "lebdecomp/hermitian_eigen.hpp"
#include "lebdecomp/matrix.hpp"
#include "support.hpp"

using namespace lebdecomp;
using testsupport::Rng;

TEST_CASE("matrix arithmetic basics") {
  Matrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = Complex(0.0, 1.0);
  a(1, 0) = 2.0;
  a(1, 1) = -1.0;

  const Matrix id = Matrix::identity(2);
  CHECK((a * id - a).frobenius_norm() == 0.0);
  CHECK((id * a - a).frobenius_norm() == 0.0);

  const Matrix s = a + a;
  CHECK(s(1, 0) == Complex(4.0, 0.0));
  CHECK((s - a * 2.0 - Matrix(2, 2)).frobenius_norm() == 0.0);

  const Matrix adj = a.adjoint();
  CHECK(adj(1, 0) == Complex(0.0, -1.0));

  CHECK_THROWS_AS(a * Matrix(3, 3), Error);
}

TEST_CASE("hermitian_part is exactly Hermitian") {
  Rng rng(11);
  const Matrix m = testsupport::random_matrix(5, 5, rng);
  const Matrix h = hermitian_part(m);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(h(i, i).imag() == 0.0);
    for (std::size_t j = 0; j < 5; ++j) CHECK(h(i, j) == std::conj(h(j, i)));
  }
  CHECK((h - (m + m.adjoint()) * 0.5).frobenius_norm() < 1e-15);
}

TEST_CASE("eigh diagonalizes planted spectra") {
  Rng rng(21);
  for (std::size_t n : {1u, 2u, 3u, 8u, 16u, 32u}) {
    std::vector<double> planted(n);
    std::uniform_real_distribution<double> dist(-3.0, 5.0);
    for (double& x : planted) x = dist(rng);
    std::sort(planted.rbegin(), planted.rend());

    const Matrix u = testsupport::random_unitary(n, rng);
    Matrix scaled = u;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= planted[k];
    const Matrix a = hermitian_part(scaled * u.adjoint());

    const EigenDecomposition eig = eigh(a);
    REQUIRE(eig.values.size() == n);
    double scale = 1.0 + std::abs(planted.front()) + std::abs(planted.back());
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(eig.values[k] - planted[k]) < 1e-10 * scale);

    // unitary eigenvectors, exact reconstruction
    const Matrix& v = eig.vectors;
    CHECK((v.adjoint() * v - Matrix::identity(n)).frobenius_norm() < 1e-12 * n);
    Matrix rec = v;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) rec(i, k) *= eig.values[k];
    CHECK((rec * v.adjoint() - a).frobenius_norm() < 1e-11 * scale);
  }
}

TEST_CASE("eigh on degenerate and trivial inputs") {
  CHECK(eigh(Matrix(3, 3)).values == std::vector<double>{0.0, 0.0, 0.0});

  // repeated eigenvalues
  Rng rng(31);
  const Matrix u = testsupport::random_unitary(4, rng);
  std::vector<double> planted = {2.0, 2.0, 2.0, 1.0};
  Matrix scaled = u;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i) scaled(i, k) *= planted[k];
  const EigenDecomposition eig = eigh(hermitian_part(scaled * u.adjoint()));
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(eig.values[k] - planted[k]) < 1e-11);

  CHECK_THROWS_AS(eigh(Matrix(2, 3)), Error);
}
