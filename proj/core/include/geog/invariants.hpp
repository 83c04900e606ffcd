#pragma once

#include "geog/numeric.hpp"

#include <compare>
#include <string>

namespace geog {

enum class Parity { spin, non_spin };

constexpr const char* parity_name(Parity p) {
  return p == Parity::spin ? "spin" : "non-spin";
}

/// Exact characteristic-number bundle of a closed complex surface /
/// simply connected 4-manifold. The four fields are redundant on
/// purpose; constructors enforce the linear relations
///   c1sq = 2e + 3 sigma,  chi = (e + sigma)/4,  c1sq + e = 12 chi.
struct CharNumbers {
  Int chi;
  Int c1sq;
  Int e;
  Int sigma;

  bool operator==(const CharNumbers&) const = default;

  /// Exact slope c1^2 / chi. Requires chi != 0.
  Rat slope() const;

  /// Exact ratio |sigma| / e. Requires e != 0.
  Rat sigma_e_ratio() const;

  /// Exact ratio -sigma / c1^2. Requires c1sq != 0.
  Rat neg_sigma_over_c1sq() const;
};

/// Builds the bundle from (chi, c1^2); always well defined over the integers.
CharNumbers from_chi_c1sq(const Int& chi, const Int& c1sq);

/// Builds the bundle from (e, sigma); defined iff e + sigma == 0 (mod 4).
CharNumbers from_e_sigma(const Int& e, const Int& sigma);

/// Freedman classification datum for a simply connected 4-manifold.
/// Two simply connected descriptors are homeomorphic iff these compare equal.
struct HomeoType {
  Int b_plus;
  Int b_minus;
  Parity parity;
  bool simply_connected = true;

  bool operator==(const HomeoType&) const = default;
};

/// Solves (b+, b-) from (e, sigma) and attaches the parity.
/// Errors: NonRealizable when b+/b- are negative or non-integral,
/// RokhlinViolation when spin and sigma != 0 (mod 16).
HomeoType homeo_type(const CharNumbers& cn, Parity parity);

enum class HitchinThorpe { strict, equality, violated };

constexpr const char* hitchin_thorpe_name(HitchinThorpe v) {
  switch (v) {
    case HitchinThorpe::strict:   return "strict";
    case HitchinThorpe::equality: return "equality";
    case HitchinThorpe::violated: return "violated";
  }
  return "?";
}

/// Classifies 2e - 3|sigma| by sign.
HitchinThorpe hitchin_thorpe(const CharNumbers& cn);

/// Standard-form target p CP^2 # q CP^2bar of a non-spin descriptor.
/// One further CP^2 stabilization lands on (p+1, q).
struct DissolveTarget {
  Int p;
  Int q;
  DissolveTarget stabilized() const { return {p + 1, q}; }
  bool operator==(const DissolveTarget&) const = default;
};

/// Errors: SpinInput for spin descriptors (never of this form).
DissolveTarget dissolve_target(const HomeoType& ht);

}  // namespace geog
