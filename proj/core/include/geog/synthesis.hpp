#pragma once

#include "geog/branched_covers.hpp"
#include "geog/invariants.hpp"
#include "geog/number_theory.hpp"
#include "geog/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace geog {

inline constexpr int kSquareParts = 16;

/// Parity requested for the canonical divisibilities of a synthesized
/// tuple. Odd divisibility forces m0 even (non-spin surfaces); even
/// divisibility forces m0 odd, which requires all mu denominators odd.
enum class DivisibilityParity { odd, even };

constexpr const char* divisibility_parity_name(DivisibilityParity p) {
  return p == DivisibilityParity::odd ? "odd" : "even";
}

/// Smallest possible sum of 16 positive squares with fixed sum A
/// (the balanced configuration).
Int min_sum_squares(const Int& A);

/// Guaranteed representability window for sum A: every B with
/// B = A (mod 2) and b_min <= B <= b_max is representable as 16 positive
/// squares summing to A. b_max is floor(A^2/15); b_min is the balanced
/// minimum, which never exceeds A^2/16 + kappa*A + kappa_prime. The window
/// is conservative for small A (verified by direct solves there) and may
/// even be empty; representable pairs outside it still solve fine.
struct FeasibilityWindow {
  Int b_min;
  Int b_max;
  Int kappa = 0;
  Int kappa_prime = 4;

  bool contains(const Int& b) const { return b >= b_min && b <= b_max; }
};

FeasibilityWindow feasibility_window(const Int& A);

/// Sixteen positive integers with sum A and sum of squares B, verified
/// exactly. Construction: eight symmetric pairs (c_j + t_j, c_j - t_j)
/// around the balanced split, with the t's a four-square decomposition of
/// (B - min_sum_squares(A))/2; odd A swaps one pair for a consecutive one.
/// Falls back to exhaustive search for small A.
/// Errors: ParityMismatch; OutOfWindow (carrying the computed window).
std::vector<Int> sixteen_squares(const Int& A, const Int& B, Rng& rng);
std::vector<Int> sixteen_squares(const Int& A, const Int& B,
                                 std::uint64_t rng_seed = 0x9e3779b97f4a7c15ULL);

enum class M0Policy { auto_minimal, explicit_value };

/// Input of the k-tuple synthesis: k homeomorphic branched covers with
/// pairwise distinct canonical divisibilities and a target signature
/// profile mu. alpha = 0 derives the prime-window tightness from delta
/// and mu; likewise search_limit = 0 sizes the sieve automatically.
struct KTupleSpec {
  Int k = 2;
  std::vector<Rat> mu;
  Rat delta = Rat(1, 10);
  Rat alpha = 0;
  M0Policy m0_policy = M0Policy::auto_minimal;
  Int m0_explicit = 0;
  DivisibilityParity parity_target = DivisibilityParity::odd;
};

/// Throws on malformed specs; ParityConflict when even divisibility is
/// requested with an even mu denominator.
void validate(const KTupleSpec& spec);

/// Sum of mu_j^2, exact.
Rat mu_square(const KTupleSpec& spec);

struct SynthesisOptions {
  std::int64_t search_limit = 0;  // 0 = auto
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int max_doublings = 48;
};

struct PerPrimeRecord {
  Int d;
  Int a;  // A_d = sum of the 16 curve parameters
  Int b;  // B_d = sum of their squares
  FeasibilityWindow window;
  std::vector<Int> parts;  // the 16 curve parameters
};

/// Full replay data of one synthesis run.
struct SynthesisState {
  PrimeWindow window;      // D and the alpha actually used
  Int p_product;           // P
  Rat epsilon;             // delta / (d* - 1)
  Int m0 = 0;
  Int c = 0;               // C
  Int c_prime = 0;         // C'
  Int c_modulus = 0;       // step lattice for C
  Int c_prime_modulus = 0; // step lattice for C'
  Int delta_width = 0;     // feasibility window width at d*
  std::vector<PerPrimeRecord> per_prime;
  std::int64_t search_limit_used = 0;
  int attempts = 0;
};

struct KTupleResult {
  std::vector<CoverTower> towers;   // ordered by ascending d
  CharNumbers shared;
  std::vector<Int> divisibilities;  // (P/d)^8 C, descending
  Rat achieved_sigma_ratio;         // -sigma / c1^2 == C' / (3 C^2)
  KTupleSpec spec;
  SynthesisState state;
};

/// The constructive pipeline: prime window, C and C' congruence solves,
/// exact per-prime window verification, sixteen-square representations,
/// tower assembly, and full independent re-verification of the result.
/// Errors: Exhausted, ParityConflict, WindowFailure, InconsistentSystem.
KTupleResult synthesize(const KTupleSpec& spec, const SynthesisOptions& opts = {});

struct SlopeReport {
  Rat slope;        // c1^2 / chi
  Rat sigma_ratio;  // -sigma / c1^2
  Rat mu_sq;        // requested sum of mu_j^2
  Rat distance;     // |sigma_ratio - mu_sq|
};

SlopeReport slope_report(const KTupleResult& result);

}  // namespace geog
