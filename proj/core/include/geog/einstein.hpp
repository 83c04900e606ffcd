#pragma once

#include "geog/invariants.hpp"
#include "geog/numeric.hpp"
#include "geog/symplectic.hpp"
#include "geog/synthesis.hpp"
#include "geog/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geog {

/// Blowup threshold: a minimal symplectic manifold with nonzero
/// Seiberg-Witten invariants loses all Einstein metrics after one third of
/// its c1^2 in blowups. Non-strict by default ("suffice"); a config flag
/// upgrades to strict. Requires minimal_c1sq > 0.
bool blowup_obstruction(const Int& minimal_c1sq, const Int& b, bool strict = false);

/// Connected-sum obstruction for 2 or 4 symplectic summands with
/// b+ = 3 (mod 4) each and k extra CP2bar copies:
///   two:  k >= (c1^2(X1) + c1^2(X2))/3 - 4
///   four: k >= (sum c1^2)/3 - 12 and total b+ not divisible by 8.
/// Errors: WrongArity; CongruenceViolation; InvalidArgument for k < 0.
bool connected_sum_obstruction(const std::vector<Int>& summand_c1sq,
                               const std::vector<Int>& summand_bplus, const Int& k_bars);

struct ZEntry {
  CoverTower tower;
  Int divisibility;
  Verdict verdict;  // KE-exists
};

struct XEntry {
  SumRecipe minimal_recipe;            // planner output, before blowups
  Int blowups;                         // b = c1^2(N) - c1^2(Z)
  CharNumbers minimal_cn;              // invariants of the minimal recipe
  std::vector<SumRecipe> family;       // log-transform members (blowups applied)
  Verdict verdict;                     // obstructed
};

struct MainTheoremReport {
  Int k;
  KTupleResult tuple;
  std::vector<ZEntry> z_list;
  std::vector<XEntry> x_list;
  HomeoType shared_homeo;
  Rat slope;
};

struct MatchOptions {
  int scan_width = 256;     // c1^2(N) candidates tried above the threshold
  int max_x_entries = 1;
  PlannerConfig planner;
  std::vector<Int> family_multiplicities = {2, 3, 5};
  SynthesisOptions synthesis;
};

/// Materializes one main-theorem instance: k towers carrying
/// Kaehler-Einstein metrics and blown-up planner recipes carrying none,
/// all of one homeomorphism type. The Z side comes from synthesize; the
/// X side solves chi(N) = chi_Z, c1^2(N) = c1^2_Z + b with 3b >= c1^2(N).
/// Errors: SlopeOutOfRange when the tuple slope exceeds 6 (or the planner
/// ceiling); synthesis errors propagate.
MainTheoremReport assemble_main_theorem(const Int& k, const KTupleSpec& spec,
                                        const MatchOptions& opts = {});

struct PqWitness {
  std::string route;        // "blowup", "two-summand", "four-summand"
  std::string description;  // witness construction, human readable
  std::optional<SumRecipe> recipe;
  Int blowups = 0;
  Int k_bars = 0;
};

struct PqVerdict {
  Verdict verdict;
  std::optional<PqWitness> witness;
};

struct PqOptions {
  int scan_width = 64;
  PlannerConfig planner;
};

/// Infinitely-many-non-Einstein-structures predicate for p CP2 # q CP2bar.
/// Returns obstructed only with an explicit verified witness: p odd goes
/// through the blowup route, p = 2 (mod 4) through one planner summand plus
/// a K3, p = 4 (mod 8) through three K3 copies; p = 0 (mod 8) is outside
/// the method and always unknown.
PqVerdict pq_structures(const Int& p, const Int& q, const PqOptions& opts = {});

}  // namespace geog
