#ifndef LEBDECOMP_LEBDECOMP_HPP
#define LEBDECOMP_LEBDECOMP_HPP

#include "lebdecomp/error.hpp"
#include "lebdecomp/forms.hpp"
#include "lebdecomp/functionals.hpp"
#include "lebdecomp/hermitian_eigen.hpp"
#include "lebdecomp/json_io.hpp"
#include "lebdecomp/lebesgue.hpp"
#include "lebdecomp/matrix.hpp"
#include "lebdecomp/measures.hpp"
#include "lebdecomp/psd.hpp"

#endif  // LEBDECOMP_LEBDECOMP_HPP
