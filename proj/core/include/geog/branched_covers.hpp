#pragma once

#include "geog/invariants.hpp"
#include "geog/numeric.hpp"
#include "geog/verdict.hpp"

#include <vector>

namespace geog {

/// One stage of an iterated cyclic cover of the plane: a degree-d cyclic
/// cover branched over the preimage of a smooth plane curve of degree d*m.
struct CoverStage {
  Int degree;       // d_j >= 2
  Int curve_param;  // m_j >= 1, branch curve degree = d_j * m_j

  bool operator==(const CoverStage&) const = default;
};

/// Ordered stage list (d_1, m_1), ..., (d_r, m_r). Only the parameters
/// matter for every invariant computed here; no branch-locus geometry
/// is represented.
struct CoverTower {
  std::vector<CoverStage> stages;

  bool operator==(const CoverTower&) const = default;
};

/// Throws InvalidArgument unless every stage has d >= 2, m >= 1 and the
/// tower is nonempty.
void validate(const CoverTower& t);

/// Product of the covering degrees.
Int total_degree(const CoverTower& t);

/// The canonical class is this multiple of the pulled-back line class:
/// sum (d_j - 1) m_j - 3.
Int canonical_multiple(const CoverTower& t);

/// Exact Chern/signature bundle of the tower:
///   c1^2 = (prod d) (sum (d_j-1) m_j - 3)^2
///   e    = (prod d) ((sum (d_j-1) m_j - 3)^2 + sum (d_j^2-1) m_j^2 - 3) / 2
///   sigma = -(prod d) (sum (d_j^2-1) m_j^2 - 3) / 3
/// The 12*chi identity is asserted; a failure is an internal bug.
CharNumbers chern(const CoverTower& t);

struct Divisibility {
  Int value;
  bool spin;  // even canonical divisibility
};

/// Divisibility of the canonical class; requires canonical_multiple >= 1
/// (errors NotGeneralType otherwise).
Divisibility canonical_divisibility(const CoverTower& t);

/// Kaehler-Einstein verdict for the tower: KE-exists via the negative
/// Calabi solution when the ample-canonical flag holds (canonical multiple
/// >= 1; recorded as a stated assumption), unknown otherwise. Iterated
/// covers of the plane are almost completely decomposable; the ACD flag
/// rides along in the rule chain.
Verdict einstein_flag(const CoverTower& t);

}  // namespace geog
