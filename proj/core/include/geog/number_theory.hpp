#pragma once

#include "geog/numeric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace geog {

/// A set D of k odd primes all lying in a narrow relative window:
/// (d + 1) < alpha * (d' - 1) for every ordered pair of distinct d, d' in D.
/// A single prime qualifies trivially.
struct PrimeWindow {
  std::vector<Int> primes;  // ascending
  Rat alpha;

  Int product() const;
  const Int& min() const { return primes.front(); }
  const Int& max() const { return primes.back(); }
  bool satisfies_window() const;
};

/// Scans primes ascending with a segmented sieve and returns the first
/// group of k consecutive odd primes whose span fits the window; that
/// group has the smallest attainable maximal element, which is the
/// tie-break rule. Errors: Exhausted when no group exists below the limit.
PrimeWindow primes_in_window(int k, const Rat& alpha, std::int64_t search_limit);

/// x = residue (mod modulus), with 0 <= residue < modulus.
struct Congruence {
  Int residue;
  Int modulus;

  bool operator==(const Congruence&) const = default;
};

/// Classical CRT for pairwise coprime moduli.
/// Errors: NonCoprimeModuli naming the first offending pair.
Congruence crt_solve(const std::vector<Congruence>& congruences);

/// Solves a*x = b (mod n); empty when gcd(a, n) does not divide b.
std::optional<Congruence> solve_linear_congruence(const Int& a, const Int& b, const Int& n);

/// Intersection of two congruence classes with arbitrary moduli;
/// empty when inconsistent on the shared factor.
std::optional<Congruence> crt_merge(const Congruence& a, const Congruence& b);

/// General simultaneous solver (non-coprime moduli allowed).
/// Errors: InconsistentSystem.
Congruence crt_solve_general(const std::vector<Congruence>& congruences);

/// Solves the simultaneous system
///   (P/d)^exponent * x = target  (mod scale * (d^modulus_power - 1))
/// over all d in D, where P is the product of D. Covers both the
/// linear-modulus system (exponent 8, modulus_power 1) and the
/// quadratic one (exponent 16, modulus_power 2). `scale` = 2 bakes
/// parity constraints into the class. Errors: InconsistentSystem.
Congruence solve_power_system(const PrimeWindow& D, const Int& target, unsigned exponent,
                              unsigned modulus_power, unsigned scale = 1);

/// (P/d)^8 * C = target (mod d-1) for all d in D.
Congruence solve_C(const PrimeWindow& D, const Int& target);

/// (P/d)^16 * C' = target (mod d^2-1) for all d in D.
Congruence solve_Cprime(const PrimeWindow& D, const Int& target);

/// Miller-Rabin with the small deterministic base set plus `rounds`
/// random bases; per-call error probability below 4^-rounds (the default
/// 40 rounds gives < 2^-80, well under the 2^-64 budget). Callers verify
/// downstream results exactly, so a wrong answer only costs a retry.
bool is_probable_prime(const Int& n, Rng& rng, int rounds = 40);

/// Tonelli-Shanks square root of a modulo an odd prime p;
/// empty when a is a non-residue (or the primality assumption fails).
std::optional<Int> sqrt_mod(const Int& a, const Int& p, Rng& rng);

/// Writes a prime p = 1 (mod 4) as c^2 + d^2 via a modular sqrt of -1
/// followed by Euclidean descent. Result verified exactly; empty only
/// when p was not actually such a prime.
std::optional<std::array<Int, 2>> two_square_prime(const Int& p, Rng& rng);

/// Exact four-square decomposition of N >= 0, sorted descending.
/// Brute force below `brute_threshold`; above it, a randomized
/// prime-seeking reduction plus two-square extraction. Deterministic
/// for a fixed seed; every output is verified exactly before return.
std::array<Int, 4> four_square(const Int& n, Rng& rng, const Int& brute_threshold = Int(1000000));
std::array<Int, 4> four_square(const Int& n, std::uint64_t rng_seed = 0x9e3779b97f4a7c15ULL);

}  // namespace geog
