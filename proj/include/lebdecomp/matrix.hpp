#ifndef LEBDECOMP_MATRIX_HPP
#define LEBDECOMP_MATRIX_HPP

// Dense complex matrices and vectors, sized for dimensions up to a few dozen.
// Everything is value-semantic; operations return fresh matrices.

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "lebdecomp/error.hpp"

namespace lebdecomp {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex c) {
    for (Complex& v : data_) v *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex c) { return a *= c; }
  friend Matrix operator*(Complex c, Matrix a) { return a *= c; }
  friend Matrix operator*(Matrix a, double c) { return a *= Complex(c, 0.0); }
  friend Matrix operator*(double c, Matrix a) { return a *= Complex(c, 0.0); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size())
      throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
    Vector out(a.rows_, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
    return out;
  }

  Vector col(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void set_col(std::size_t j, const Vector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(Errc::dimension_mismatch, "matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Complex> data_;
};

// Exactly Hermitian average (m + m*)/2: mirrored entries are stored as exact
// conjugates and the diagonal is real.
inline Matrix hermitian_part(const Matrix& m) {
  if (m.rows() != m.cols())
    throw Error(Errc::not_square, "hermitian part of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

inline Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.rows() != b.rows())
    throw Error(Errc::dimension_mismatch, "hcat row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

// Standard inner product, linear in the first argument: <x, y> = y* x.
inline Complex inner(const Vector& x, const Vector& y) {
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(y[i]) * x[i];
  return s;
}

inline double norm2(const Vector& x) {
  double s = 0.0;
  for (const Complex& v : x) s += std::norm(v);
  return std::sqrt(s);
}

// <A x, x> for Hermitian A; the imaginary part is roundoff and dropped.
inline double quadratic_form(const Matrix& a, const Vector& x) {
  return inner(a * x, x).real();
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_MATRIX_HPP
