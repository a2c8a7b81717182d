#ifndef LEBDECOMP_LEBESGUE_HPP
#define LEBDECOMP_LEBESGUE_HPP

// Lebesgue-type decomposition of positive semidefinite matrices: parallel
// sums, the scaled-parallel-sum limit, the canonical split into absolutely
// continuous and singular parts, cross-checked absolute-continuity and
// singularity predicates, range-inclusion factorization, the least domination
// constant, and a uniform approximation witness.
//
// Throughout, "B is absolutely continuous with respect to A" is the kernel
// inclusion ker A <= ker B, and "A, B mutually singular" means no nonzero
// positive matrix sits below both.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "lebdecomp/error.hpp"
#include "lebdecomp/matrix.hpp"
#include "lebdecomp/psd.hpp"

namespace lebdecomp {

struct DecompositionResult {
  PsdMatrix b_abs;         // part absolutely continuous with respect to A
  PsdMatrix b_sing;        // singular part
  SubspaceBasis m_basis;   // span of B^{1/2} ker A inside ran B^{1/2}
  Matrix projection_p;     // orthogonal projection onto that span
  PsdMatrix sqrt_b;
};

struct SumFactorization {
  PsdMatrix sum;  // A + B
  Matrix c_a;     // contraction with (A+B)^{1/2} c_a (A+B)^{1/2} = A
  Matrix c_b;     // likewise for B
};

struct DouglasSolution {
  Matrix factor_d;   // solves T1 = T2 D
  double alpha_min;  // squared norm of D, the least domination constant
};

struct RnWitness {
  Vector z;         // least-squares approximant
  double residual;  // uniform error over { x : <(A+B)x, x> <= 1 }
};

struct Characterization {
  std::string name;
  bool verdict;
  double residual;
};

struct CheckReport {
  bool verdict;
  std::vector<Characterization> items;
};

namespace detail {

inline void require_same_dim(const PsdMatrix& a, const PsdMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(Errc::dimension_mismatch, "operands have different dimensions");
}

// Common decision threshold for the yes/no predicates; the 100x margin over
// conv_tol keeps iteration error well inside the verdict band.
inline double verdict_tol(const Tolerance& tol, double scale) {
  return 100.0 * tol.conv_tol * (1.0 + scale);
}

}  // namespace detail

// Parallel sum A : B, the positive matrix whose quadratic form at x is
//   inf_y { <A(x-y), x-y> + <B y, y> },
// attained at y = (A+B)^+ A x; closed form A (A+B)^+ B. The exact value sits
// below both summands, which bounds the permissible roundoff negativity.
inline PsdMatrix parallel_sum(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  const PsdMatrix sum = make_psd(a.entries() + b.entries(), a.tol());
  // A (A+B)^+ B evaluated as (S^{+1/2} A)* (S^{+1/2} B); the balanced factors
  // keep roundoff at the scale of the result even for widely mismatched
  // summands.
  const Matrix r = pinv(sqrt_psd(sum)).entries();
  const Matrix product = (r * a.entries()).adjoint() * (r * b.entries());
  return make_psd_clamped(hermitian_part(product), a.tol(),
                          std::min(a.lambda_max(), b.lambda_max()));
}

// The pair of contractions C_A, C_B with (A+B)^{1/2} C_A (A+B)^{1/2} = A and
// C_A + C_B acting as the identity on ran(A+B).
inline SumFactorization sum_factorization(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  SumFactorization out;
  out.sum = make_psd(a.entries() + b.entries(), a.tol());
  const Matrix r = pinv(sqrt_psd(out.sum)).entries();
  out.c_a = hermitian_part(r * a.entries() * r);
  out.c_b = hermitian_part(r * b.entries() * r);
  return out;
}

// Monotone limit of (2^k A) : B; it equals the absolutely continuous part of
// B with respect to A.
//
// The iterates are evaluated through the sum factorization: with S = A + B
// and C_A the contraction carrying A, the scaled parallel sum diagonalizes in
// the eigenbasis of C_A as
//   (n A) : B = S^{1/2} phi_n(C_A) S^{1/2},  phi_n(c) = n c (1-c) / ((n-1) c + 1),
// because n C_A + C_B = (n-1) C_A + I on ran S keeps every inverted
// eigenvalue at least 1. Scaling enters only through the scalar phi_n, so the
// doubling schedule stays exact where the direct product formula loses all
// accuracy once 2^k A pushes B across the rank cutoff of the sum.
inline PsdMatrix limit_ab(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  const double threshold = b.tol().conv_tol * (1.0 + b.frobenius_norm());

  const SumFactorization fac = sum_factorization(a, b);
  const Matrix root = sqrt_psd(fac.sum).entries();
  const PsdMatrix c_a = make_psd(fac.c_a, a.tol());
  std::vector<double> spectrum(c_a.dim(), 0.0);
  for (std::size_t i = 0; i < c_a.rank(); ++i)
    spectrum[i] = std::min(c_a.eigenvalues()[i], 1.0);
  const Matrix basis = root * c_a.eigenvectors();

  const auto iterate = [&](double n) {
    Matrix scaled = basis;
    for (std::size_t k = 0; k < scaled.cols(); ++k) {
      const double c = spectrum[k];
      const double phi = n * c * (1.0 - c) / ((n - 1.0) * c + 1.0);
      for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, k) *= phi;
    }
    return hermitian_part(scaled * basis.adjoint());
  };

  Matrix prev = iterate(1.0);
  for (int k = 1; k <= 60; ++k) {
    Matrix next = iterate(std::ldexp(1.0, k));
    if ((next - prev).frobenius_norm() <= threshold)
      return make_psd_clamped(next, b.tol(), b.lambda_max());
    prev = std::move(next);
  }
  throw Error(Errc::no_convergence, "parallel-sum limit did not stabilize in 60 doublings");
}

// Canonical decomposition B = B_a + B_s with respect to A. The defect
// subspace is span(B^{1/2} ker A); projecting it out of B^{1/2} on both sides
// yields the absolutely continuous part, its complement the singular part.
inline DecompositionResult decompose(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  DecompositionResult out;
  out.sqrt_b = sqrt_psd(b);
  const SubspaceBasis ker_a = kernel_basis(a);
  const Matrix span = out.sqrt_b.entries() * ker_a.vectors;
  out.m_basis = orthonormal_range_basis(span, b.tol());
  out.projection_p = projection_matrix(out.m_basis);
  const Matrix complement = Matrix::identity(b.dim()) - out.projection_p;
  out.b_abs = make_psd_clamped(
      hermitian_part(out.sqrt_b.entries() * complement * out.sqrt_b.entries()), b.tol(),
      b.lambda_max());
  out.b_sing = make_psd_clamped(
      hermitian_part(out.sqrt_b.entries() * out.projection_p * out.sqrt_b.entries()),
      b.tol(), b.lambda_max());
  return out;
}

// Absolute continuity of B with respect to A, decided three ways and
// required to agree: kernel inclusion, triviality of ker C_A inside
// ran(A+B), and the parallel-sum limit recovering B itself.
inline CheckReport check_ac(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  const double tol = detail::verdict_tol(b.tol(), b.frobenius_norm());
  CheckReport report;

  const SubspaceBasis ker_a = kernel_basis(a);
  double worst = 0.0;
  for (std::size_t k = 0; k < ker_a.dim(); ++k)
    worst = std::max(worst, norm2(b.entries() * ker_a.vectors.col(k)));
  report.items.push_back({"kernel_inclusion", worst <= tol, worst});

  const SumFactorization fac = sum_factorization(a, b);
  const PsdMatrix c_a = make_psd(fac.c_a, a.tol());
  const double deficit =
      static_cast<double>(fac.sum.rank()) - static_cast<double>(c_a.rank());
  report.items.push_back({"sum_contraction_kernel", c_a.rank() == fac.sum.rank(), deficit});

  const PsdMatrix lim = limit_ab(a, b);
  const double gap = (lim.entries() - b.entries()).frobenius_norm();
  report.items.push_back({"limit_attains_b", gap <= tol, gap});

  report.verdict = report.items.front().verdict;
  for (const Characterization& c : report.items)
    if (c.verdict != report.verdict)
      throw Error(Errc::characterization_disagreement,
                  "absolute-continuity characterizations disagree");
  return report;
}

// Mutual singularity of A and B, decided four ways and required to agree:
// vanishing parallel sum, the defect subspace filling ran B^{1/2}, additive
// range ranks, and solvability of (Ax ~ 0, Bx ~ b) for every range vector b.
inline CheckReport check_singular(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  const double scale_tol =
      detail::verdict_tol(b.tol(), a.frobenius_norm() + b.frobenius_norm());
  CheckReport report;

  const double psum_norm = parallel_sum(a, b).frobenius_norm();
  report.items.push_back({"parallel_sum_zero", psum_norm <= scale_tol, psum_norm});

  const DecompositionResult dec = decompose(a, b);
  const double m_deficit =
      static_cast<double>(b.rank()) - static_cast<double>(dec.m_basis.dim());
  report.items.push_back({"multivalued_part_full", dec.m_basis.dim() == b.rank(), m_deficit});

  const SubspaceBasis ran_a = range_basis(a);
  const SubspaceBasis ran_b = range_basis(b);
  const std::size_t joint = matrix_rank(hcat(ran_a.vectors, ran_b.vectors), a.tol());
  const double rank_deficit =
      static_cast<double>(ran_a.dim() + ran_b.dim()) - static_cast<double>(joint);
  report.items.push_back(
      {"range_intersection_trivial", joint == ran_a.dim() + ran_b.dim(), rank_deficit});

  // least-squares solvability over ker A: b must lie in span(B ker A)
  const SubspaceBasis ker_a = kernel_basis(a);
  const Matrix reachable = b.entries() * ker_a.vectors;
  const Matrix proj = project_onto(reachable, b.tol());
  double worst = 0.0;
  for (std::size_t k = 0; k < ran_b.dim(); ++k) {
    const Vector v = ran_b.vectors.col(k);
    Vector res = proj * v;
    for (std::size_t i = 0; i < res.size(); ++i) res[i] = v[i] - res[i];
    worst = std::max(worst, norm2(res));
  }
  // Truncating the span at the relative rank cutoff leaks components of up
  // to sqrt(cutoff) into the residual; the genuine obstruction is a
  // principal angle of order one.
  const double unit_tol =
      std::max(100.0 * b.tol().conv_tol, 10.0 * std::sqrt(b.tol().rel_rank));
  report.items.push_back({"kernel_least_squares", worst <= unit_tol, worst});

  report.verdict = report.items.front().verdict;
  for (const Characterization& c : report.items)
    if (c.verdict != report.verdict)
      throw Error(Errc::characterization_disagreement,
                  "singularity characterizations disagree");
  return report;
}

// Executable theorem check: the absolutely continuous parts of B w.r.t. A and
// of A w.r.t. B are mutually absolutely continuous, i.e. their kernels agree
// (both equal ker A + ker B). Returns true on every valid input pair.
inline bool check_mutual_ac(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  const PsdMatrix b_abs = decompose(a, b).b_abs;
  const PsdMatrix a_abs = decompose(b, a).b_abs;
  const Matrix pk_b = projection_matrix(kernel_basis(b_abs));
  const Matrix pk_a = projection_matrix(kernel_basis(a_abs));
  return (pk_b - pk_a).frobenius_norm() <= 1e-8;
}

// Solve T1 = T2 D when ran T1 is contained in ran T2. The pseudo-inverse
// factor D = T2^+ T1 is the unique solution supported on (ker T2)^perp with
// ker D = ker T1 and minimal norm; alpha_min is its squared largest singular
// value, the least alpha with T1 T1* <= alpha T2 T2*.
inline DouglasSolution douglas_solve(const Matrix& t1, const Matrix& t2,
                                     const Tolerance& tol = {}) {
  if (t1.rows() != t2.rows())
    throw Error(Errc::dimension_mismatch, "factorization operands need equal row counts");
  tol.validate();
  DouglasSolution out;
  out.factor_d = pinv_rect(t2, tol) * t1;
  const double residual = (t2 * out.factor_d - t1).frobenius_norm();
  if (residual > 1e-8 * (1.0 + t1.frobenius_norm()))
    throw Error(Errc::range_inclusion_violated,
                "range of T1 is not contained in range of T2");
  const double smax = sigma_max(out.factor_d);
  out.alpha_min = smax * smax;
  return out;
}

// Unique contraction C supported on ran A with A^{1/2} C A^{1/2} = B,
// defined for B <= A.
inline Matrix contract_factor(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  if (!psd_leq(b, a, a.tol()))
    throw Error(Errc::not_dominated, "operand is not dominated");
  const Matrix r = pinv(sqrt_psd(a)).entries();
  const Matrix raw = hermitian_part(r * b.entries() * r);
  EigenDecomposition eig = eigh(raw);
  for (double& lam : eig.values) lam = std::min(std::max(lam, 0.0), 1.0);
  Matrix scaled = eig.vectors;
  for (std::size_t k = 0; k < scaled.cols(); ++k)
    for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, k) *= eig.values[k];
  return hermitian_part(scaled * eig.vectors.adjoint());
}

// Least alpha with B_a <= alpha A, where B_a is the absolutely continuous
// part of B with respect to A. Always finite here: ran B_a sits inside ran A.
inline double domination_alpha(const PsdMatrix& a, const PsdMatrix& b) {
  detail::require_same_dim(a, b);
  if (a.dim() == 0) return 0.0;
  const PsdMatrix b_abs = decompose(a, b).b_abs;
  const Matrix r = pinv(sqrt_psd(a)).entries();
  const Matrix m = hermitian_part(r * b_abs.entries() * r);
  return std::max(eigh(m).values.front(), 0.0);
}

// Least-squares z minimizing the uniform error of <Bx, y> ~ <Ax, z> over the
// ellipsoid <(A+B)x, x> <= 1; the optimum value is
// || (A+B)^{+1/2} (B y - A z) ||.
inline RnWitness rn_witness(const PsdMatrix& a, const PsdMatrix& b, const Vector& y) {
  detail::require_same_dim(a, b);
  if (y.size() != a.dim())
    throw Error(Errc::dimension_mismatch, "witness vector has wrong length");
  const PsdMatrix sum = make_psd(a.entries() + b.entries(), a.tol());
  const Matrix r = pinv(sqrt_psd(sum)).entries();
  const Matrix lhs = r * a.entries();
  const Vector target = r * (b.entries() * y);
  RnWitness out;
  out.z = pinv_rect(lhs, a.tol()) * target;
  Vector res = lhs * out.z;
  for (std::size_t i = 0; i < res.size(); ++i) res[i] = target[i] - res[i];
  out.residual = norm2(res);
  return out;
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_LEBESGUE_HPP
