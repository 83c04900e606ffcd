#pragma once

#include <stdexcept>
#include <string>

namespace geog {

enum class Errc {
  invalid_argument,
  non_realizable,
  rokhlin_violation,
  spin_input,
  exhausted,
  non_coprime_moduli,
  inconsistent_system,
  parity_mismatch,
  out_of_window,
  window_failure,
  parity_conflict,
  not_general_type,
  inconsistent_formulas,
  not_a_surface,
  unknown_entry,
  unreachable,
  spin_recipe,
  no_elliptic_seam,
  no_elliptic_block,
  wrong_arity,
  congruence_violation,
  slope_out_of_range,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument:      return "InvalidArgument";
    case Errc::non_realizable:        return "NonRealizable";
    case Errc::rokhlin_violation:     return "RokhlinViolation";
    case Errc::spin_input:            return "SpinInput";
    case Errc::exhausted:             return "Exhausted";
    case Errc::non_coprime_moduli:    return "NonCoprimeModuli";
    case Errc::inconsistent_system:   return "InconsistentSystem";
    case Errc::parity_mismatch:       return "ParityMismatch";
    case Errc::out_of_window:         return "OutOfWindow";
    case Errc::window_failure:        return "WindowFailure";
    case Errc::parity_conflict:       return "ParityConflict";
    case Errc::not_general_type:      return "NotGeneralType";
    case Errc::inconsistent_formulas: return "InconsistentFormulas";
    case Errc::not_a_surface:         return "NotASurface";
    case Errc::unknown_entry:         return "UnknownEntry";
    case Errc::unreachable:           return "Unreachable";
    case Errc::spin_recipe:           return "SpinRecipe";
    case Errc::no_elliptic_seam:      return "NoEllipticSeam";
    case Errc::no_elliptic_block:     return "NoEllipticBlock";
    case Errc::wrong_arity:           return "WrongArity";
    case Errc::congruence_violation:  return "CongruenceViolation";
    case Errc::slope_out_of_range:    return "SlopeOutOfRange";
  }
  return "Unknown";
}

/// Inputs that are syntactically fine but mathematically infeasible get
/// distinguished from malformed input so the CLI can map exit codes.
constexpr bool errc_is_malformed(Errc c) {
  switch (c) {
    case Errc::invalid_argument:
    case Errc::wrong_arity:
    case Errc::congruence_violation:
    case Errc::unknown_entry:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace geog
