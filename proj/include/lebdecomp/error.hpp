#ifndef LEBDECOMP_ERROR_HPP
#define LEBDECOMP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lebdecomp {

enum class Errc {
  not_square,
  not_hermitian,
  not_psd,
  dimension_mismatch,
  no_convergence,
  characterization_disagreement,
  range_inclusion_violated,
  not_dominated,
  probe_disagreement,
  atom_mismatch,
  oracle_disagreement,
  invalid_data,
  algebra_mismatch,
  not_representable,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_square: return "NotSquare";
    case Errc::not_hermitian: return "NotHermitian";
    case Errc::not_psd: return "NotPsd";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::characterization_disagreement: return "CharacterizationDisagreement";
    case Errc::range_inclusion_violated: return "RangeInclusionViolated";
    case Errc::not_dominated: return "NotDominated";
    case Errc::probe_disagreement: return "ProbeDisagreement";
    case Errc::atom_mismatch: return "AtomMismatch";
    case Errc::oracle_disagreement: return "OracleDisagreement";
    case Errc::invalid_data: return "InvalidData";
    case Errc::algebra_mismatch: return "AlgebraMismatch";
    case Errc::not_representable: return "NotRepresentable";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace lebdecomp

#endif  // LEBDECOMP_ERROR_HPP
