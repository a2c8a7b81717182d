#ifndef LEBDECOMP_PSD_HPP
#define LEBDECOMP_PSD_HPP

// Validated Hermitian positive-semidefinite matrices with cached spectral
// data, plus the rank/cutoff policy shared by every higher-level operation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "lebdecomp/error.hpp"
#include "lebdecomp/hermitian_eigen.hpp"
#include "lebdecomp/matrix.hpp"

namespace lebdecomp {

struct Tolerance {
  double rel_rank = 1e-10;  // relative eigenvalue cutoff
  double abs_zero = 1e-12;  // absolute cutoff when the largest eigenvalue is 0
  double psd_slack = 1e-9;  // permitted relative negativity before validation fails
  double conv_tol = 1e-9;   // iteration stopping threshold

  void validate() const {
    if (rel_rank < 0 || abs_zero < 0 || psd_slack < 0 || conv_tol < 0)
      throw Error(Errc::invalid_data, "tolerance fields must be nonnegative");
    if (rel_rank >= 1.0)
      throw Error(Errc::invalid_data, "rel_rank must be below 1");
  }
};

class PsdMatrix {
 public:
  PsdMatrix() = default;

  std::size_t dim() const { return dim_; }
  const Matrix& entries() const { return entries_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }
  std::size_t rank() const { return rank_; }
  const Tolerance& tol() const { return tol_; }

  double lambda_max() const { return dim_ == 0 ? 0.0 : eigenvalues_.front(); }
  double cutoff() const { return std::max(tol_.rel_rank * lambda_max(), tol_.abs_zero); }
  double frobenius_norm() const { return entries_.frobenius_norm(); }

  // Validating constructor: symmetrize, diagonalize, clamp roundoff-level
  // negative eigenvalues to zero, reject anything worse.
  static PsdMatrix from_raw(const Matrix& raw, const Tolerance& tol) {
    tol.validate();
    if (raw.rows() != raw.cols())
      throw Error(Errc::not_square, "matrix is not square");
    const double asym = (raw - raw.adjoint()).frobenius_norm();
    if (asym > tol.psd_slack * (1.0 + raw.frobenius_norm()))
      throw Error(Errc::not_hermitian, "matrix is not Hermitian within slack");

    PsdMatrix out;
    out.tol_ = tol;
    out.dim_ = raw.rows();
    out.entries_ = hermitian_part(raw);
    EigenDecomposition eig = eigh(out.entries_);
    const double lam_max = out.dim_ == 0 ? 0.0 : eig.values.front();
    const double neg_tol = std::max(tol.psd_slack * std::max(lam_max, 0.0), tol.abs_zero);
    for (double& lam : eig.values) {
      if (lam < -neg_tol)
        throw Error(Errc::not_psd, "matrix has an eigenvalue below the negativity slack");
      if (lam < 0.0) lam = 0.0;
    }
    out.eigenvalues_ = std::move(eig.values);
    out.eigenvectors_ = std::move(eig.vectors);
    out.rank_ = out.count_rank();
    return out;
  }

  // Assemble from known spectral data (a unitary and nonnegative values);
  // used for matrix functions of an already-validated PsdMatrix.
  static PsdMatrix from_spectral(const Matrix& unitary, std::vector<double> values,
                                 const Tolerance& tol) {
    const std::size_t n = unitary.rows();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });

    PsdMatrix out;
    out.tol_ = tol;
    out.dim_ = n;
    out.eigenvalues_.resize(n);
    out.eigenvectors_ = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      out.eigenvalues_[k] = std::max(values[order[k]], 0.0);
      for (std::size_t i = 0; i < n; ++i) out.eigenvectors_(i, k) = unitary(i, order[k]);
    }
    Matrix scaled = out.eigenvectors_;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= out.eigenvalues_[k];
    out.entries_ = hermitian_part(scaled * out.eigenvectors_.adjoint());
    out.rank_ = out.count_rank();
    return out;
  }

 private:
  std::size_t count_rank() const {
    const double c = cutoff();
    std::size_t r = 0;
    while (r < dim_ && eigenvalues_[r] > c) ++r;
    return r;
  }

  std::size_t dim_ = 0;
  Matrix entries_;
  std::vector<double> eigenvalues_;
  Matrix eigenvectors_;
  std::size_t rank_ = 0;
  Tolerance tol_;
};

struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  Matrix vectors;  // orthonormal columns; zero columns for the trivial subspace

  std::size_t dim() const { return vectors.cols(); }
};

inline PsdMatrix make_psd(const Matrix& raw, const Tolerance& tol = {}) {
  return PsdMatrix::from_raw(raw, tol);
}

// Validate a Hermitian matrix that is positive by construction but whose
// floating-point negativity scales with a known bound on the exact result
// (for products like A (A+B)^+ B, whose exact value sits below both A and B).
inline PsdMatrix make_psd_clamped(const Matrix& herm, const Tolerance& tol,
                                  double scale_bound) {
  tol.validate();
  EigenDecomposition eig = eigh(herm);
  const double neg_tol = tol.psd_slack * (1.0 + std::max(scale_bound, 0.0));
  for (double& lam : eig.values) {
    if (lam < -neg_tol)
      throw Error(Errc::not_psd, "matrix has an eigenvalue below the negativity slack");
    if (lam < 0.0) lam = 0.0;
  }
  return PsdMatrix::from_spectral(eig.vectors, std::move(eig.values), tol);
}

// Spectral function helper: apply f to retained eigenvalues, zero the rest.
// Discarded directions stay discarded, so rank and range are preserved.
template <typename F>
inline PsdMatrix spectral_map(const PsdMatrix& a, F&& f) {
  std::vector<double> values(a.dim(), 0.0);
  for (std::size_t k = 0; k < a.rank(); ++k) values[k] = f(a.eigenvalues()[k]);
  return PsdMatrix::from_spectral(a.eigenvectors(), std::move(values), a.tol());
}

inline PsdMatrix sqrt_psd(const PsdMatrix& a) {
  return spectral_map(a, [](double lam) { return std::sqrt(lam); });
}

inline PsdMatrix pinv(const PsdMatrix& a) {
  return spectral_map(a, [](double lam) { return 1.0 / lam; });
}

inline PsdMatrix scale_psd(const PsdMatrix& a, double c) {
  if (c < 0.0) throw Error(Errc::invalid_data, "scale factor must be nonnegative");
  std::vector<double> values(a.eigenvalues());
  for (double& lam : values) lam *= c;
  return PsdMatrix::from_spectral(a.eigenvectors(), std::move(values), a.tol());
}

inline SubspaceBasis range_basis(const PsdMatrix& a) {
  SubspaceBasis out;
  out.ambient_dim = a.dim();
  out.vectors = Matrix(a.dim(), a.rank());
  for (std::size_t k = 0; k < a.rank(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) out.vectors(i, k) = a.eigenvectors()(i, k);
  return out;
}

inline SubspaceBasis kernel_basis(const PsdMatrix& a) {
  SubspaceBasis out;
  out.ambient_dim = a.dim();
  const std::size_t k0 = a.rank();
  out.vectors = Matrix(a.dim(), a.dim() - k0);
  for (std::size_t k = k0; k < a.dim(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) out.vectors(i, k - k0) = a.eigenvectors()(i, k);
  return out;
}

// Orthonormal basis of the column span, by eigendecomposition of the Gram
// matrix S S* with singular values truncated at the rank cutoff.
inline SubspaceBasis orthonormal_range_basis(const Matrix& span_columns,
                                             const Tolerance& tol = {}) {
  tol.validate();
  SubspaceBasis out;
  out.ambient_dim = span_columns.rows();
  if (span_columns.cols() == 0 || span_columns.rows() == 0) {
    out.vectors = Matrix(span_columns.rows(), 0);
    return out;
  }
  const Matrix gram = hermitian_part(span_columns * span_columns.adjoint());
  EigenDecomposition eig = eigh(gram);
  const double lam_max = std::max(eig.values.front(), 0.0);
  const double cut = std::max(tol.rel_rank * lam_max, tol.abs_zero);
  std::size_t r = 0;
  while (r < eig.values.size() && eig.values[r] > cut) ++r;
  out.vectors = Matrix(span_columns.rows(), r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < span_columns.rows(); ++i)
      out.vectors(i, k) = eig.vectors(i, k);
  return out;
}

inline Matrix projection_matrix(const SubspaceBasis& basis) {
  if (basis.dim() == 0) return Matrix(basis.ambient_dim, basis.ambient_dim);
  return hermitian_part(basis.vectors * basis.vectors.adjoint());
}

inline Matrix project_onto(const Matrix& span_columns, const Tolerance& tol = {}) {
  return projection_matrix(orthonormal_range_basis(span_columns, tol));
}

// Loewner-order test B - A >= 0 up to the negativity slack.
inline bool psd_leq(const PsdMatrix& a, const PsdMatrix& b, const Tolerance& tol) {
  if (a.dim() != b.dim())
    throw Error(Errc::dimension_mismatch, "psd_leq dimension mismatch");
  if (a.dim() == 0) return true;
  EigenDecomposition eig = eigh(b.entries() - a.entries());
  const double lam_min = eig.values.back();
  return lam_min >= -tol.psd_slack * (1.0 + b.lambda_max());
}

inline bool psd_leq(const PsdMatrix& a, const PsdMatrix& b) {
  return psd_leq(a, b, b.tol());
}

// --- rectangular helpers built on the Hermitian eigensolver ---

// Moore-Penrose inverse of a general matrix via (M* M)^+ M*.
inline Matrix pinv_rect(const Matrix& m, const Tolerance& tol = {}) {
  if (m.rows() == 0 || m.cols() == 0) return m.adjoint();
  const PsdMatrix gram = make_psd(m.adjoint() * m, tol);
  return pinv(gram).entries() * m.adjoint();
}

inline std::size_t matrix_rank(const Matrix& m, const Tolerance& tol = {}) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return make_psd(m.adjoint() * m, tol).rank();
}

inline double sigma_max(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const Matrix gram = hermitian_part(m.adjoint() * m);
  const double lam = eigh(gram).values.front();
  return std::sqrt(std::max(lam, 0.0));
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_PSD_HPP
