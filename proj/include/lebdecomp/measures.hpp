#ifndef LEBDECOMP_MEASURES_HPP
#define LEBDECOMP_MEASURES_HPP

// Nonnegative finitely additive set functions on the power set of a finite
// atom list, and their reduction to diagonal positive matrices on the
// function space over the atoms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lebdecomp/error.hpp"
#include "lebdecomp/lebesgue.hpp"
#include "lebdecomp/psd.hpp"

namespace lebdecomp {

struct MeasureTable {
  std::vector<std::string> atoms;
  std::vector<double> values;  // one nonnegative value per atom

  double total() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
};

inline MeasureTable make_measure(std::vector<std::string> atoms, std::vector<double> values) {
  if (atoms.empty()) throw Error(Errc::invalid_data, "measure needs at least one atom");
  if (atoms.size() != values.size())
    throw Error(Errc::invalid_data, "atom and value counts differ");
  std::set<std::string> seen;
  for (const std::string& a : atoms) {
    if (a.empty()) throw Error(Errc::invalid_data, "atom labels must be nonempty");
    if (!seen.insert(a).second)
      throw Error(Errc::invalid_data, "atom labels must be unique");
  }
  for (double v : values)
    if (!(v >= 0.0)) throw Error(Errc::invalid_data, "measure values must be nonnegative");
  return MeasureTable{std::move(atoms), std::move(values)};
}

// The operator induced on the atom-indexed function space: <A phi, psi> is
// the integral of phi conj(psi), which is diagonal with the atom weights.
inline PsdMatrix measure_induced_operator(const MeasureTable& m, const Tolerance& tol = {}) {
  Matrix d(m.values.size(), m.values.size());
  for (std::size_t i = 0; i < m.values.size(); ++i) d(i, i) = m.values[i];
  return make_psd(d, tol);
}

// Whether a positive matrix arises from a measure on the atoms: exactly the
// diagonal ones. The modulus condition <A|phi|, |phi|> = <A phi, phi> is also
// probed directly on signed/rotated basis pairs and random vectors, and the
// two routes must agree.
inline bool induces_measure(const PsdMatrix& a) {
  const std::size_t n = a.dim();
  const double structural_tol = 1e-9 * (1.0 + a.lambda_max());

  double max_offdiag = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) max_offdiag = std::max(max_offdiag, std::abs(a.entries()(i, j)));
  const bool structural = max_offdiag <= structural_tol;

  const auto probe_gap = [&](const Vector& phi) {
    Vector mod(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) mod[i] = std::abs(phi[i]);
    return std::abs(quadratic_form(a.entries(), mod) - quadratic_form(a.entries(), phi));
  };

  bool probe = true;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < n && probe; ++i) {
    for (std::size_t j = i + 1; j < n && probe; ++j) {
      for (const Complex phase : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
        Vector phi(n, Complex(0.0, 0.0));
        phi[i] = inv_sqrt2;
        phi[j] = phase * inv_sqrt2;
        if (probe_gap(phi) > 2.0 * structural_tol) {
          probe = false;
          break;
        }
      }
    }
  }
  // random probes accumulate every off-diagonal entry, hence the wider bound
  std::mt19937_64 rng(0x6d65617375726573ULL);
  std::normal_distribution<double> g(0.0, 1.0);
  const double random_tol = 2.0 * static_cast<double>(n * n) * structural_tol;
  for (int t = 0; t < 50 && probe; ++t) {
    Vector phi(n);
    for (Complex& c : phi) c = Complex(g(rng), g(rng));
    const double nv = norm2(phi);
    if (nv == 0.0) continue;
    for (Complex& c : phi) c /= nv;
    if (probe_gap(phi) > random_tol) probe = false;
  }

  if (structural != probe)
    throw Error(Errc::probe_disagreement,
                "structural and sampled measure criteria disagree");
  return structural;
}

// Lebesgue split of beta with respect to alpha through the induced operators,
// checked against the classical atomwise rule: the absolutely continuous part
// keeps the mass on atoms alpha charges, the singular part the rest.
inline std::pair<MeasureTable, MeasureTable> measure_decompose(const MeasureTable& alpha,
                                                               const MeasureTable& beta,
                                                               const Tolerance& tol = {}) {
  if (alpha.atoms != beta.atoms)
    throw Error(Errc::atom_mismatch, "measures are defined on different atom lists");
  const std::size_t n = alpha.atoms.size();

  const PsdMatrix a = measure_induced_operator(alpha, tol);
  const PsdMatrix b = measure_induced_operator(beta, tol);
  const DecompositionResult d = decompose(a, b);

  const double agree_tol = 1e-9;
  const double alpha_cut = a.cutoff();
  std::vector<double> abs_vals(n), sing_vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double operator_abs = d.b_abs.entries()(i, i).real();
    const double operator_sing = d.b_sing.entries()(i, i).real();
    const bool charged = alpha.values[i] > alpha_cut;
    const double oracle_abs = charged ? beta.values[i] : 0.0;
    const double oracle_sing = charged ? 0.0 : beta.values[i];
    if (std::abs(operator_abs - oracle_abs) > agree_tol ||
        std::abs(operator_sing - oracle_sing) > agree_tol)
      throw Error(Errc::oracle_disagreement,
                  "operator route deviates from the atomwise split");
    abs_vals[i] = std::max(operator_abs, 0.0);
    sing_vals[i] = std::max(operator_sing, 0.0);
  }
  // the parts of a diagonal pair must come out diagonal
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (std::abs(d.b_abs.entries()(i, j)) > agree_tol ||
                     std::abs(d.b_sing.entries()(i, j)) > agree_tol))
        throw Error(Errc::oracle_disagreement, "operator route produced off-diagonal mass");

  return {MeasureTable{alpha.atoms, std::move(abs_vals)},
          MeasureTable{alpha.atoms, std::move(sing_vals)}};
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_MEASURES_HPP
