#ifndef LEBDECOMP_FORMS_HPP
#define LEBDECOMP_FORMS_HPP

// Nonnegative Hermitian forms on a finite-dimensional space, identified with
// their Gram matrices in the standard basis.

#include <cstddef>
#include <utility>

#include "lebdecomp/error.hpp"
#include "lebdecomp/lebesgue.hpp"
#include "lebdecomp/psd.hpp"

namespace lebdecomp {

struct FormSpec {
  std::size_t dim = 0;
  PsdMatrix gram;
};

inline FormSpec make_form(const Matrix& gram, const Tolerance& tol = {}) {
  FormSpec out;
  out.gram = make_psd(gram, tol);
  out.dim = out.gram.dim();
  return out;
}

// Split t into a w-closable part and a w-singular part. Closability of a
// form matches absolute continuity of its Gram matrix, so this is the core
// decomposition of t's Gram with respect to w's.
inline std::pair<FormSpec, FormSpec> form_decompose(const FormSpec& t, const FormSpec& w) {
  if (t.dim != w.dim)
    throw Error(Errc::dimension_mismatch, "forms live on different dimensions");
  const DecompositionResult d = decompose(w.gram, t.gram);
  return {FormSpec{t.dim, d.b_abs}, FormSpec{t.dim, d.b_sing}};
}

}  // namespace lebdecomp

#endif  // LEBDECOMP_FORMS_HPP
