#ifndef LEBDECOMP_TESTS_SUPPORT_HPP
#define LEBDECOMP_TESTS_SUPPORT_HPP

// Shared generators and comparison helpers for the test suites. All
// randomness is seeded explicitly so every run sees the same corpus.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lebdecomp/hermitian_eigen.hpp"
#include "lebdecomp/matrix.hpp"
#include "lebdecomp/psd.hpp"

namespace testsupport {

using lebdecomp::Complex;
using lebdecomp::Matrix;
using lebdecomp::PsdMatrix;
using lebdecomp::Tolerance;
using lebdecomp::Vector;

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return Complex(g(rng), g(rng));
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex(rng);
  return m;
}

inline Vector random_vector(std::size_t n, Rng& rng) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_complex(rng);
  return v;
}

// Gram-Schmidt with a second pass; fine at these dimensions.
inline Matrix random_unitary(std::size_t n, Rng& rng) {
  Matrix m = random_matrix(n, n, rng);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = m.col(j);
      for (std::size_t k = 0; k < j; ++k) {
        Vector u = m.col(k);
        const Complex c = lebdecomp::inner(v, u);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
      }
      const double nv = lebdecomp::norm2(v);
      for (std::size_t i = 0; i < n; ++i) v[i] /= nv;
      m.set_col(j, v);
    }
  }
  return m;
}

// Random PSD matrix of exact rank r (as X X* with r independent columns).
inline Matrix random_psd_entries(std::size_t n, std::size_t rank, Rng& rng,
                                 double scale = 1.0) {
  if (rank == 0) return Matrix(n, n);
  Matrix x = random_matrix(n, rank, rng);
  return lebdecomp::hermitian_part(x * x.adjoint()) * (scale / static_cast<double>(rank));
}

inline PsdMatrix random_psd(std::size_t n, std::size_t rank, Rng& rng, double scale = 1.0,
                            const Tolerance& tol = {}) {
  return lebdecomp::make_psd(random_psd_entries(n, rank, rng, scale), tol);
}

inline PsdMatrix random_psd_any_rank(std::size_t n, Rng& rng, const Tolerance& tol = {}) {
  std::uniform_int_distribution<std::size_t> rank_dist(0, n);
  std::uniform_real_distribution<double> scale_dist(0.25, 4.0);
  return random_psd(n, rank_dist(rng), rng, scale_dist(rng), tol);
}

inline Matrix diag(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).frobenius_norm();
}

// x <= y in Loewner order, up to an explicit slack on the smallest eigenvalue.
inline bool loewner_leq(const Matrix& x, const Matrix& y, double slack) {
  const auto eig = lebdecomp::eigh(y - x);
  return eig.values.empty() || eig.values.back() >= -slack;
}

}  // namespace testsupport

#endif  // LEBDECOMP_TESTS_SUPPORT_HPP
