#include "geog/number_theory.hpp"

#include "geog/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

namespace geog {

namespace {

// Extended gcd; returns g and x with a*x = g (mod m-ish usage below).
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Int mod_inverse(const Int& a, const Int& n) {
  Int x, y;
  Int g = ext_gcd(((a % n) + n) % n, n, x, y);
  if (g != 1) raise(Errc::inconsistent_system, "no inverse of " + a.str() + " mod " + n.str());
  return ((x % n) + n) % n;
}

Int normalize(const Int& r, const Int& m) { return ((r % m) + m) % m; }

}  // namespace

Int PrimeWindow::product() const {
  Int p = 1;
  for (const auto& d : primes) p *= d;
  return p;
}

bool PrimeWindow::satisfies_window() const {
  if (primes.empty()) return false;
  if (primes.size() == 1) return primes[0] >= 3;
  // Cross-multiplied check over all ordered pairs of distinct entries.
  for (size_t i = 0; i < primes.size(); ++i)
    for (size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      if ((primes[i] + 1) * denominator(alpha) >= numerator(alpha) * (primes[j] - 1)) return false;
    }
  return true;
}

namespace {

// Segmented sieve streaming odd primes in ascending order to a visitor.
// The visitor returns true to stop early.
template <typename Visit>
void for_odd_primes_up_to(std::int64_t limit, Visit&& visit) {
  if (limit < 3) return;
  std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 2;
  while (root * root > limit) --root;

  // Base primes up to sqrt(limit) by a plain sieve.
  std::vector<bool> base(root + 1, true);
  std::vector<std::int64_t> base_primes;
  for (std::int64_t i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    base_primes.push_back(i);
    for (std::int64_t j = i * i; j <= root; j += i) base[j] = false;
  }
  for (std::int64_t p : base_primes)
    if (p >= 3 && visit(p)) return;

  constexpr std::int64_t kSegment = 1 << 20;
  std::vector<bool> seg;
  for (std::int64_t lo = root + 1; lo <= limit; lo += kSegment) {
    const std::int64_t hi = std::min(lo + kSegment - 1, limit);
    seg.assign(hi - lo + 1, true);
    for (std::int64_t p : base_primes) {
      std::int64_t start = ((lo + p - 1) / p) * p;
      if (start < p * p) start = p * p;
      for (std::int64_t j = start; j <= hi; j += p) seg[j - lo] = false;
    }
    for (std::int64_t v = lo; v <= hi; ++v)
      if (seg[v - lo] && (v & 1) && visit(v)) return;
  }
}

}  // namespace

PrimeWindow primes_in_window(int k, const Rat& alpha, std::int64_t search_limit) {
  if (k < 1) raise(Errc::invalid_argument, "window size k must be >= 1");
  if (alpha <= 1) raise(Errc::invalid_argument, "alpha must exceed 1");
  if (search_limit < 3) raise(Errc::exhausted, "search limit below the first odd prime");

  // Among all qualifying sets sharing a maximal element p, the k
  // consecutive odd primes ending at p maximize the minimum, so the
  // ascending scan over consecutive runs finds the smallest-valued set.
  std::deque<std::int64_t> run;
  PrimeWindow out;
  out.alpha = alpha;
  bool found = false;
  for_odd_primes_up_to(search_limit, [&](std::int64_t p) {
    run.push_back(p);
    if (static_cast<int>(run.size()) > k) run.pop_front();
    if (static_cast<int>(run.size()) == k) {
      const bool ok = k == 1 || Int(run.back() + 1) * denominator(alpha) <
                                    numerator(alpha) * Int(run.front() - 1);
      if (ok) {
        for (auto v : run) out.primes.emplace_back(v);
        found = true;
        return true;
      }
    }
    return false;
  });
  if (!found)
    raise(Errc::exhausted, "no window of " + std::to_string(k) + " odd primes with alpha = " +
                               to_string(alpha) + " below " + std::to_string(search_limit));
  return out;
}

Congruence crt_solve(const std::vector<Congruence>& congruences) {
  if (congruences.empty()) raise(Errc::invalid_argument, "empty congruence system");
  for (const auto& c : congruences) {
    if (c.modulus <= 0) raise(Errc::invalid_argument, "modulus must be positive");
    if (c.residue < 0 || c.residue >= c.modulus)
      raise(Errc::invalid_argument, "residue out of range [0, modulus)");
  }
  for (size_t i = 0; i < congruences.size(); ++i)
    for (size_t j = i + 1; j < congruences.size(); ++j) {
      Int g = gcd(congruences[i].modulus, congruences[j].modulus);
      if (g != 1)
        raise(Errc::non_coprime_moduli, "moduli " + congruences[i].modulus.str() + " and " +
                                            congruences[j].modulus.str() + " share factor " + g.str());
    }
  Congruence acc = congruences.front();
  for (size_t i = 1; i < congruences.size(); ++i) {
    const auto& c = congruences[i];
    // x = acc.r + acc.m * t with t = (c.r - acc.r) / acc.m (mod c.m).
    Int t = normalize((c.residue - acc.residue) * mod_inverse(acc.modulus, c.modulus), c.modulus);
    acc.residue += acc.modulus * t;
    acc.modulus *= c.modulus;
  }
  acc.residue = normalize(acc.residue, acc.modulus);
  return acc;
}

std::optional<Congruence> solve_linear_congruence(const Int& a, const Int& b, const Int& n) {
  if (n <= 0) raise(Errc::invalid_argument, "modulus must be positive");
  Int ar = normalize(a, n), br = normalize(b, n);
  Int g = gcd(ar == 0 ? n : ar, n);
  if (br % g != 0) return std::nullopt;
  Int n2 = n / g;
  if (n2 == 1) return Congruence{0, 1};
  Int x = normalize((br / g) * mod_inverse(ar / g, n2), n2);
  return Congruence{x, n2};
}

std::optional<Congruence> crt_merge(const Congruence& a, const Congruence& b) {
  Int g = gcd(a.modulus, b.modulus);
  if ((b.residue - a.residue) % g != 0) return std::nullopt;
  Int l = a.modulus / g * b.modulus;
  Int m2 = b.modulus / g;
  Int t = normalize(((b.residue - a.residue) / g) * mod_inverse(a.modulus / g, m2), m2);
  return Congruence{normalize(a.residue + a.modulus * t, l), l};
}

Congruence crt_solve_general(const std::vector<Congruence>& congruences) {
  if (congruences.empty()) raise(Errc::invalid_argument, "empty congruence system");
  Congruence acc{normalize(congruences[0].residue, congruences[0].modulus), congruences[0].modulus};
  for (size_t i = 1; i < congruences.size(); ++i) {
    auto merged = crt_merge(acc, {normalize(congruences[i].residue, congruences[i].modulus),
                                  congruences[i].modulus});
    if (!merged)
      raise(Errc::inconsistent_system,
            "congruences disagree on a shared factor of " + acc.modulus.str() + " and " +
                congruences[i].modulus.str());
    acc = *merged;
  }
  return acc;
}

Congruence solve_power_system(const PrimeWindow& D, const Int& target, unsigned exponent,
                              unsigned modulus_power, unsigned scale) {
  if (D.primes.empty()) raise(Errc::invalid_argument, "empty prime set");
  const Int P = D.product();
  Congruence acc{0, 1};
  for (const auto& d : D.primes) {
    Int modulus = scale * (pow_int(d, modulus_power) - 1);
    Int coeff = powm(P / d, Int(exponent), modulus);
    auto local = solve_linear_congruence(coeff, target, modulus);
    if (!local)
      raise(Errc::inconsistent_system,
            "no solution of (P/d)^" + std::to_string(exponent) + " x = " + target.str() +
                " (mod " + modulus.str() + ") at d = " + d.str());
    auto merged = crt_merge(acc, *local);
    if (!merged)
      raise(Errc::inconsistent_system, "per-prime congruences are jointly inconsistent at d = " + d.str());
    acc = *merged;
  }
  return acc;
}

Congruence solve_C(const PrimeWindow& D, const Int& target) {
  return solve_power_system(D, target, 8, 1, 1);
}

Congruence solve_Cprime(const PrimeWindow& D, const Int& target) {
  return solve_power_system(D, target, 16, 2, 1);
}

bool is_probable_prime(const Int& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  static constexpr int kSmall[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                   41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (int p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto witness = [&](const Int& a) {
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
      x = (x * x) % n;
      if (x == n - 1) return false;
    }
    return true;  // composite witnessed
  };
  for (int p : kSmall)
    if (witness(p)) return false;
  for (int i = 0; i < rounds; ++i)
    if (witness(rng.between(2, n - 2))) return false;
  return true;
}

std::optional<Int> sqrt_mod(const Int& a, const Int& p, Rng& rng) {
  Int ar = normalize(a, p);
  if (ar == 0) return Int(0);
  if (p == 2) return ar;
  if (powm(ar, (p - 1) / 2, p) != 1) return std::nullopt;  // Euler criterion
  if (p % 4 == 3) {
    Int x = powm(ar, (p + 1) / 4, p);
    if ((x * x) % p == ar) return x;
    return std::nullopt;
  }
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  Int q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Int z;
  for (int tries = 0; tries < 256; ++tries) {
    z = rng.between(2, p - 1);
    if (powm(z, (p - 1) / 2, p) == p - 1) break;  // non-residue found
    z = 0;
  }
  if (z == 0) return std::nullopt;
  Int m = s, c = powm(z, q, p), t = powm(ar, q, p), x = powm(ar, (q + 1) / 2, p);
  while (t != 1) {
    Int tt = t;
    Int i = 0;
    while (tt != 1) {
      tt = (tt * tt) % p;
      if (++i == m) return std::nullopt;
    }
    Int b = powm(c, pow_int(2, static_cast<unsigned>(m - i - 1)), p);
    x = (x * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  if ((x * x) % p != ar) return std::nullopt;
  return x;
}

std::optional<std::array<Int, 2>> two_square_prime(const Int& p, Rng& rng) {
  if (p == 2) return std::array<Int, 2>{1, 1};
  if (p % 4 != 1) return std::nullopt;
  auto root = sqrt_mod(p - 1, p, rng);
  if (!root) return std::nullopt;
  Int z = *root;
  if (z > p / 2) z = p - z;
  // Euclidean descent: the first remainder below sqrt(p) is one leg.
  Int a = p, b = z;
  const Int bound = isqrt(p);
  while (b > bound) {
    Int r = a % b;
    a = b;
    b = r;
  }
  Int d2 = p - b * b;
  if (!is_square(d2)) return std::nullopt;
  Int d = isqrt(d2);
  if (b * b + d * d != p) return std::nullopt;
  return std::array<Int, 2>{b, d};
}

namespace {

std::array<Int, 4> sorted4(Int a, Int b, Int c, Int d) {
  std::array<Int, 4> out{std::move(a), std::move(b), std::move(c), std::move(d)};
  std::sort(out.begin(), out.end(), std::greater<Int>());
  return out;
}

// Exhaustive search, small n only (fits 64-bit by construction of callers).
std::array<Int, 4> four_square_brute(const Int& n) {
  const std::int64_t N = n.convert_to<std::int64_t>();
  auto sq = [](std::int64_t v) { return v * v; };
  std::int64_t ra = static_cast<std::int64_t>(std::sqrt(static_cast<double>(N)));
  while (sq(ra) > N) --ra;
  while (sq(ra + 1) <= N) ++ra;
  for (std::int64_t a = ra; a >= 0; --a) {
    const std::int64_t rem_a = N - sq(a);
    std::int64_t rb = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem_a)));
    while (rb > 0 && sq(rb) > rem_a) --rb;
    while (sq(rb + 1) <= rem_a) ++rb;
    if (rb > a) rb = a;
    for (std::int64_t b = rb; b >= 0; --b) {
      const std::int64_t rem_b = rem_a - sq(b);
      std::int64_t rc = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem_b)));
      while (rc > 0 && sq(rc) > rem_b) --rc;
      while (sq(rc + 1) <= rem_b) ++rc;
      if (rc > b) rc = b;
      const std::int64_t c_lo = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem_b) / 2.0));
      for (std::int64_t c = rc; c + 1 >= c_lo; --c) {
        if (c < 0) break;
        const std::int64_t rem_c = rem_b - sq(c);
        const std::int64_t d = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rem_c)));
        for (std::int64_t dd = d + 1; dd >= d - 1 && dd >= 0; --dd) {
          if (dd <= c && sq(dd) == rem_c) return sorted4(a, b, c, dd);
        }
      }
    }
  }
  raise(Errc::inconsistent_formulas, "four-square brute force failed; unreachable for n >= 0");
}

}  // namespace

std::array<Int, 4> four_square(const Int& n, Rng& rng, const Int& brute_threshold) {
  if (n < 0) raise(Errc::invalid_argument, "four_square requires n >= 0");
  if (n == 0) return {0, 0, 0, 0};

  // Strip factors of four; they scale the decomposition by two.
  Int m = n;
  Int scale = 1;
  while (m % 4 == 0) {
    m /= 4;
    scale *= 2;
  }
  std::array<Int, 4> core{};
  const Int brute_cap = Int(std::int64_t(1) << 31);  // keep int64 squares safe
  if (m <= brute_threshold && m <= brute_cap) {
    core = four_square_brute(m);
  } else {
    // m mod 4 is 1, 2 or 3; pick parities so q = m - a^2 - b^2 = 1 (mod 4),
    // then hunt for q prime and split it into two squares.
    const Int m_mod4 = m % 4;
    int a_par = 0, b_par = 0;
    if (m_mod4 == 2) a_par = 1;
    if (m_mod4 == 3) a_par = b_par = 1;
    const Int ra = isqrt(m);
    bool done = false;
    for (int tries = 0; tries < 200000 && !done; ++tries) {
      Int a = rng.below(ra + 1);
      if ((a & 1) != a_par) {
        if (a > 0)
          --a;
        else
          ++a;
      }
      Int rem_a = m - a * a;
      if (rem_a < 0) continue;
      Int rb = isqrt(rem_a);
      Int b = rng.below(rb + 1);
      if ((b & 1) != b_par) {
        if (b > 0)
          --b;
        else
          ++b;
      }
      Int q = rem_a - b * b;
      if (q < 0) continue;
      if (q == 1) {
        core = sorted4(a, b, 1, 0);
        done = true;
        break;
      }
      if (q % 4 != 1) continue;  // parity nudge at 0 can break the class; just retry
      if (!is_probable_prime(q, rng)) continue;
      auto cd = two_square_prime(q, rng);
      if (!cd) continue;  // primality test lied; retry
      core = sorted4(a, b, (*cd)[0], (*cd)[1]);
      done = true;
    }
    if (!done)
      raise(Errc::exhausted, "four_square randomized search exceeded retry budget for n = " + n.str());
  }
  for (auto& v : core) v *= scale;
  std::array<Int, 4> out = sorted4(core[0], core[1], core[2], core[3]);
  if (out[0] * out[0] + out[1] * out[1] + out[2] * out[2] + out[3] * out[3] != n)
    raise(Errc::inconsistent_formulas, "four_square verification failed");
  return out;
}

std::array<Int, 4> four_square(const Int& n, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return four_square(n, rng);
}

}  // namespace geog
