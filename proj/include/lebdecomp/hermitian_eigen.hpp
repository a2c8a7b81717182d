#ifndef LEBDECOMP_HERMITIAN_EIGEN_HPP
#define LEBDECOMP_HERMITIAN_EIGEN_HPP

// Cyclic Jacobi diagonalization for dense complex Hermitian matrices.
// Each rotation diagonalizes one 2x2 principal block exactly via its
// closed-form eigenvectors, so the annihilated off-diagonal entry is zeroed
// rather than merely reduced. Termination: off-diagonal Frobenius norm below
// 1e-12 times the Frobenius norm of the input.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "lebdecomp/error.hpp"
#include "lebdecomp/matrix.hpp"

namespace lebdecomp {

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // unitary, column k pairs with values[k]
};

namespace detail {

inline double offdiagonal_norm(const Matrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace detail

inline EigenDecomposition eigh(const Matrix& input) {
  if (input.rows() != input.cols())
    throw Error(Errc::not_square, "eigh expects a square matrix");
  const std::size_t n = input.rows();
  Matrix a = hermitian_part(input);
  Matrix v = Matrix::identity(n);

  const double fro = a.frobenius_norm();
  const double target = 1e-12 * fro;
  const double skip = (n > 0) ? target / static_cast<double>(n) : 0.0;

  constexpr int max_sweeps = 64;
  bool converged = (fro == 0.0) || (n < 2);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (detail::offdiagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex beta = a(p, q);
        const double b = std::abs(beta);
        if (b <= skip) continue;

        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double d = 0.5 * (alpha - gamma);
        const double r = std::hypot(d, b);
        const double mid = 0.5 * (alpha + gamma);
        const double lam_hi = mid + r;
        const double lam_lo = mid - r;

        // Eigenvector of [[alpha, beta], [conj(beta), gamma]] for lam_hi,
        // anchored on the larger component for stability.
        Complex u1, u2;
        if (d >= 0.0) {
          u1 = Complex(d + r, 0.0);
          u2 = std::conj(beta);
        } else {
          u1 = beta;
          u2 = Complex(r - d, 0.0);
        }
        const double nu = std::sqrt(std::norm(u1) + std::norm(u2));
        u1 /= nu;
        u2 /= nu;
        // Unitary U = [[u1, -conj(u2)], [u2, conj(u1)]].

        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const Complex t1 = a(i, p);
          const Complex t2 = a(i, q);
          a(i, p) = t1 * u1 + t2 * u2;
          a(i, q) = -t1 * std::conj(u2) + t2 * std::conj(u1);
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        a(p, p) = Complex(lam_hi, 0.0);
        a(q, q) = Complex(lam_lo, 0.0);
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);

        for (std::size_t i = 0; i < n; ++i) {
          const Complex t1 = v(i, p);
          const Complex t2 = v(i, q);
          v(i, p) = t1 * u1 + t2 * u2;
          v(i, q) = -t1 * std::conj(u2) + t2 * std::conj(u1);
        }
      }
    }
  }
  if (!converged && detail::offdiagonal_norm(a) > target)
    throw Error(Errc::no_convergence, "jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_HERMITIAN_EIGEN_HPP
