#ifndef LEBDECOMP_FUNCTIONALS_HPP
#define LEBDECOMP_FUNCTIONALS_HPP

// Representable positive functionals on two families of finite-dimensional
// *-algebras: the commutative algebra C^n with pointwise product, and the
// full matrix algebra of k x k matrices. A functional is given by defining
// data (a weight vector, or a density matrix under the trace pairing) and
// carries the matrix of f(b* a) over the canonical basis, which is the
// positive operator the decomposition theory acts on.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lebdecomp/error.hpp"
#include "lebdecomp/lebesgue.hpp"
#include "lebdecomp/matrix.hpp"
#include "lebdecomp/psd.hpp"

namespace lebdecomp {

enum class AlgebraKind { commutative, full_matrix };

struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::commutative;
  std::size_t param = 1;  // n for commutative, k for full_matrix

  bool operator==(const AlgebraDescriptor&) const = default;

  std::size_t dim() const {
    return kind == AlgebraKind::commutative ? param : param * param;
  }

  // Product of canonical basis elements; both algebras multiply basis
  // elements to a single basis element or to zero.
  std::optional<std::size_t> basis_product(std::size_t p, std::size_t q) const {
    if (kind == AlgebraKind::commutative)
      return p == q ? std::optional<std::size_t>(p) : std::nullopt;
    const std::size_t k = param;
    const std::size_t i = p / k, j = p % k, l = q / k, m = q % k;
    return j == l ? std::optional<std::size_t>(i * k + m) : std::nullopt;
  }

  // Involution permutes the canonical basis (identity / matrix transpose).
  std::size_t basis_star(std::size_t p) const {
    if (kind == AlgebraKind::commutative) return p;
    const std::size_t k = param;
    return (p % k) * k + (p / k);
  }

  Vector unit() const {
    Vector u(dim(), Complex(0.0, 0.0));
    if (kind == AlgebraKind::commutative) {
      for (Complex& c : u) c = 1.0;
    } else {
      for (std::size_t i = 0; i < param; ++i) u[i * param + i] = 1.0;
    }
    return u;
  }
};

inline Vector algebra_multiply(const AlgebraDescriptor& alg, const Vector& a, const Vector& b) {
  Vector out(alg.dim(), Complex(0.0, 0.0));
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] == Complex(0.0, 0.0)) continue;
    for (std::size_t q = 0; q < b.size(); ++q) {
      const auto r = alg.basis_product(p, q);
      if (r) out[*r] += a[p] * b[q];
    }
  }
  return out;
}

inline Vector algebra_star(const AlgebraDescriptor& alg, const Vector& a) {
  Vector out(alg.dim(), Complex(0.0, 0.0));
  for (std::size_t p = 0; p < a.size(); ++p) out[alg.basis_star(p)] = std::conj(a[p]);
  return out;
}

struct FunctionalSpec {
  AlgebraDescriptor algebra;
  std::vector<double> weights;  // defining data when commutative
  Matrix density;               // defining data when full_matrix (k x k)
  PsdMatrix gram;               // matrix of f(b* a) over the canonical basis
  double cyclic_norm = 0.0;     // f(unit)

  // f on a coordinate vector, extended linearly from the basis values.
  Complex evaluate(const Vector& a) const {
    Complex s(0.0, 0.0);
    for (std::size_t p = 0; p < a.size(); ++p) s += a[p] * basis_value(p);
    return s;
  }

  Complex basis_value(std::size_t p) const {
    if (algebra.kind == AlgebraKind::commutative) return weights[p];
    const std::size_t k = algebra.param;
    return density(p % k, p / k);  // tr(rho E_ij) = rho_ji
  }
};

namespace detail {

// Gram entry (q, p) = f(b_q* b_p), so that b^* G a = f(b^* a) for coordinate
// vectors a, b.
inline FunctionalSpec finish_functional(FunctionalSpec spec, const Tolerance& tol) {
  const std::size_t d = spec.algebra.dim();
  Matrix gram(d, d);
  for (std::size_t q = 0; q < d; ++q) {
    const std::size_t qs = spec.algebra.basis_star(q);
    for (std::size_t p = 0; p < d; ++p) {
      const auto r = spec.algebra.basis_product(qs, p);
      if (r) gram(q, p) = spec.basis_value(*r);
    }
  }
  try {
    spec.gram = make_psd(gram, tol);
  } catch (const Error& e) {
    throw Error(Errc::invalid_data,
                std::string("functional data does not induce a positive matrix: ") +
                    e.what());
  }
  spec.cyclic_norm = spec.evaluate(spec.algebra.unit()).real();
  return spec;
}

}  // namespace detail

inline FunctionalSpec functional_from_data(const AlgebraDescriptor& alg,
                                           const std::vector<double>& weights,
                                           const Tolerance& tol = {}) {
  if (alg.kind != AlgebraKind::commutative)
    throw Error(Errc::invalid_data, "weight vectors define commutative functionals only");
  if (weights.size() != alg.dim())
    throw Error(Errc::invalid_data, "weight count does not match the algebra dimension");
  for (double w : weights)
    if (!(w >= 0.0)) throw Error(Errc::invalid_data, "weights must be nonnegative");
  FunctionalSpec spec;
  spec.algebra = alg;
  spec.weights = weights;
  return detail::finish_functional(std::move(spec), tol);
}

inline FunctionalSpec functional_from_data(const AlgebraDescriptor& alg, const Matrix& density,
                                           const Tolerance& tol = {}) {
  if (alg.kind != AlgebraKind::full_matrix)
    throw Error(Errc::invalid_data, "density matrices define full-matrix functionals only");
  if (density.rows() != alg.param || density.cols() != alg.param)
    throw Error(Errc::invalid_data, "density matrix does not match the algebra size");
  PsdMatrix validated;
  try {
    validated = make_psd(density, tol);
  } catch (const Error& e) {
    throw Error(Errc::invalid_data, std::string("density is not positive: ") + e.what());
  }
  FunctionalSpec spec;
  spec.algebra = alg;
  spec.density = validated.entries();
  return detail::finish_functional(std::move(spec), tol);
}

// Lebesgue split of g with respect to f. The Gram matrix of g is decomposed
// in the operator sense; each part is pulled back to a functional through the
// unit, g_part(a) = conj(<B_part 1, a>), and its defining data is re-derived
// and revalidated. Parts must sum back to g on the basis.
inline std::pair<FunctionalSpec, FunctionalSpec> functional_decompose(const FunctionalSpec& f,
                                                                      const FunctionalSpec& g) {
  if (!(f.algebra == g.algebra))
    throw Error(Errc::algebra_mismatch, "functionals live on different algebras");
  const AlgebraDescriptor& alg = f.algebra;
  const std::size_t d = alg.dim();
  const Tolerance tol = g.gram.tol();

  const DecompositionResult dec = decompose(f.gram, g.gram);
  const Vector unit = alg.unit();
  const double data_tol = 1e-8 * (1.0 + g.gram.lambda_max());

  const auto rebuild = [&](const PsdMatrix& part) {
    const Vector image = part.entries() * unit;
    Vector on_basis(d);
    for (std::size_t p = 0; p < d; ++p) on_basis[p] = std::conj(image[p]);

    if (alg.kind == AlgebraKind::commutative) {
      std::vector<double> w(d);
      for (std::size_t p = 0; p < d; ++p) {
        if (std::abs(on_basis[p].imag()) > data_tol || on_basis[p].real() < -data_tol)
          throw Error(Errc::not_representable,
                      "reconstructed weights are not nonnegative");
        w[p] = std::max(on_basis[p].real(), 0.0);
      }
      return functional_from_data(alg, w, tol);
    }
    const std::size_t k = alg.param;
    Matrix rho(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) rho(j, i) = on_basis[i * k + j];
    try {
      return functional_from_data(alg, rho, tol);
    } catch (const Error&) {
      throw Error(Errc::not_representable, "reconstructed density is not positive");
    }
  };

  FunctionalSpec g_abs = rebuild(dec.b_abs);
  FunctionalSpec g_sing = rebuild(dec.b_sing);

  const double sum_tol = 1e-8 * (1.0 + g.gram.frobenius_norm());
  for (std::size_t p = 0; p < d; ++p) {
    const Complex gap =
        g_abs.basis_value(p) + g_sing.basis_value(p) - g.basis_value(p);
    if (std::abs(gap) > sum_tol)
      throw Error(Errc::oracle_disagreement, "parts do not sum back to the functional");
  }
  return {std::move(g_abs), std::move(g_sing)};
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_FUNCTIONALS_HPP
