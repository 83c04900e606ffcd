#include "geog/synthesis.hpp"

#include "geog/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace geog {

namespace {

// Balanced split of `total` into `parts` values, descending.
std::vector<Int> balanced_split(const Int& total, int parts) {
  Int q = total / parts, r = total % parts;
  std::vector<Int> out;
  out.reserve(parts);
  for (int i = 0; i < parts; ++i) out.push_back(i < r ? q + 1 : q);
  return out;
}

}  // namespace

Int min_sum_squares(const Int& A) {
  if (A < kSquareParts) raise(Errc::invalid_argument, "need A >= 16 for 16 positive parts");
  Int q = A / kSquareParts, s = A % kSquareParts;
  return (kSquareParts - s) * q * q + s * (q + 1) * (q + 1);
}

namespace {

// Pair scheme: even A uses eight symmetric pairs; odd A uses seven plus
// one consecutive pair. Returns the 16 values or nothing when the
// four-square offsets cannot be placed without losing positivity.
std::optional<std::vector<Int>> pair_scheme(const Int& A, const Int& B, Rng& rng) {
  const bool odd = (A % 2) != 0;
  std::vector<Int> c;          // eight pair centers, descending
  Int base_sq = 0;
  if (!odd) {
    c = balanced_split(A / 2, 8);
    for (const auto& v : c) base_sq += 2 * v * v;
  } else {
    c = balanced_split((A - 1) / 2, 8);
    // The consecutive pair sits at the smallest center.
    for (size_t i = 0; i + 1 < c.size(); ++i) base_sq += 2 * c[i] * c[i];
    base_sq += c.back() * c.back() + (c.back() + 1) * (c.back() + 1);
  }
  const Int need = B - base_sq;
  if (need < 0 || need % 2 != 0) return std::nullopt;
  const Int R = need / 2;

  // Offsets go on the four largest equal-pair centers.
  const int t_slots = 4;
  auto assignable = [&](const std::array<Int, 4>& t) {
    for (int i = 0; i < t_slots; ++i)
      if (t[i] > c[i] - 1) return false;
    return true;
  };
  std::array<Int, 4> t = four_square(R, rng);
  if (!assignable(t)) {
    // Retry with every decomposition whose largest part fits, smallest
    // feasible range first. Only reachable for small R.
    if (R > 4'000'000) return std::nullopt;
    bool found = false;
    const Int cap = c[0] - 1;
    for (Int t1 = std::min(cap, isqrt(R)); t1 >= 0 && !found; --t1) {
      Int r1 = R - t1 * t1;
      for (Int t2 = std::min(t1, isqrt(r1)); t2 >= 0 && !found; --t2) {
        Int r2 = r1 - t2 * t2;
        for (Int t3 = std::min(t2, isqrt(r2)); t3 >= 0 && t3 * t3 * 2 >= r2 && !found; --t3) {
          Int r3 = r2 - t3 * t3;
          if (!is_square(r3)) continue;
          Int t4 = isqrt(r3);
          if (t4 > t3) continue;
          std::array<Int, 4> cand{t1, t2, t3, t4};
          if (assignable(cand)) {
            t = cand;
            found = true;
          }
        }
      }
    }
    if (!found) return std::nullopt;
  }

  std::vector<Int> xs;
  xs.reserve(kSquareParts);
  const size_t equal_pairs = odd ? 7 : 8;
  for (size_t i = 0; i < equal_pairs; ++i) {
    Int off = i < 4 ? t[i] : Int(0);
    xs.push_back(c[i] + off);
    xs.push_back(c[i] - off);
  }
  if (odd) {
    xs.push_back(c.back());
    xs.push_back(c.back() + 1);
  }
  std::sort(xs.begin(), xs.end(), std::greater<Int>());
  return xs;
}

// Exhaustive fallback for small sums: non-increasing parts with an exact
// min/max sum-of-squares envelope as the prune.
bool dfs_parts(int slots, const Int& sum, const Int& sumsq, const Int& max_v, std::vector<Int>& out) {
  if (slots == 0) return sum == 0 && sumsq == 0;
  if (sum < slots || max_v < 1) return false;
  // Envelope: balanced minimum, and max_v * sum as a cheap upper bound
  // (each part p contributes p^2 <= max_v * p).
  Int q = sum / slots, s = sum % slots;
  Int lo = (slots - s) * q * q + s * (q + 1) * (q + 1);
  Int big = std::min(max_v, sum - (slots - 1));
  if (sumsq < lo || sumsq > big * sum) return false;
  Int v = big;
  if (slots > 1) v = std::min(v, isqrt(sumsq - (slots - 1)));
  for (; v >= 1; --v) {
    out.push_back(v);
    if (dfs_parts(slots - 1, sum - v, sumsq - v * v, v, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

FeasibilityWindow feasibility_window(const Int& A) {
  if (A < 1) raise(Errc::invalid_argument, "feasibility_window requires A > 0");
  FeasibilityWindow w;
  w.b_max = (A * A) / 15;
  if (A < kSquareParts) {
    w.b_min = A * A + 1;  // empty: no 16 positive parts at all
    return w;
  }
  w.b_min = min_sum_squares(A);

  // Fast path: when every admissible offset R = (B - b_min)/2 fits below
  // (c_min - 1)^2, the pair scheme covers the whole range and no scan is
  // needed. This is automatic for A >= 120 and checked exactly per A.
  Int snapped = w.b_max - ((w.b_max - A) % 2 + 2) % 2;
  Int c_min = (A - (A % 2)) / 2 / 8;  // smallest equal-pair center
  if (A % 2 != 0) c_min = (A - 1) / 2 / 8;
  Int max_off = c_min >= 1 ? (c_min - 1) * (c_min - 1) : Int(0);
  if (snapped <= w.b_min || (snapped - w.b_min) / 2 <= max_off) return w;

  // Small A: verify the upper end by direct solves, shrinking until the
  // window is contiguous. The scan touches at most ~A^2/480 values.
  Rng rng(0);
  Int verified = w.b_min;
  for (Int b = w.b_min + 2; b <= snapped; b += 2) {
    std::vector<Int> parts;
    auto res = pair_scheme(A, b, rng);
    bool ok = res.has_value();
    if (!ok && A <= 4096) ok = dfs_parts(kSquareParts, A, b, A, parts);
    if (!ok) break;
    verified = b;
  }
  w.b_max = std::min(w.b_max, verified + 1);  // keep the defining cap tight
  if (w.b_max < w.b_min) w.b_max = verified;
  return w;
}

std::vector<Int> sixteen_squares(const Int& A, const Int& B, Rng& rng) {
  if (A < 1) raise(Errc::invalid_argument, "sixteen_squares requires A > 0");
  if ((B - A) % 2 != 0)
    raise(Errc::parity_mismatch, "B = " + B.str() + " and A = " + A.str() + " differ mod 2");

  std::optional<std::vector<Int>> xs;
  if (A >= kSquareParts && B >= min_sum_squares(A)) {
    xs = pair_scheme(A, B, rng);
    if (!xs && A <= 4096) {
      std::vector<Int> parts;
      if (dfs_parts(kSquareParts, A, B, A, parts)) xs = parts;
    }
  }
  if (!xs) {
    auto w = feasibility_window(A);
    raise(Errc::out_of_window, "no representation of (A, B) = (" + A.str() + ", " + B.str() +
                                   "); guaranteed window is [" + w.b_min.str() + ", " +
                                   w.b_max.str() + "]");
  }

  Int sum = 0, sumsq = 0;
  for (const auto& v : *xs) {
    if (v < 1) raise(Errc::inconsistent_formulas, "sixteen_squares produced a non-positive part");
    sum += v;
    sumsq += v * v;
  }
  if (sum != A || sumsq != B || xs->size() != kSquareParts)
    raise(Errc::inconsistent_formulas, "sixteen_squares verification failed");
  return *xs;
}

std::vector<Int> sixteen_squares(const Int& A, const Int& B, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return sixteen_squares(A, B, rng);
}

void validate(const KTupleSpec& spec) {
  if (spec.k < 2) raise(Errc::invalid_argument, "k must be >= 2");
  if (spec.mu.empty()) raise(Errc::invalid_argument, "mu must be nonempty");
  Rat sum = 0;
  for (const auto& m : spec.mu) {
    if (m <= 0) raise(Errc::invalid_argument, "mu entries must be positive");
    sum += m;
  }
  if (sum != 1) raise(Errc::invalid_argument, "mu must sum to exactly 1, got " + to_string(sum));
  if (spec.delta <= 0) raise(Errc::invalid_argument, "delta must be positive");
  if (spec.alpha != 0 && spec.alpha <= 1) raise(Errc::invalid_argument, "alpha must exceed 1");
  if (spec.parity_target == DivisibilityParity::even) {
    for (const auto& m : spec.mu)
      if (denominator(m) % 2 == 0)
        raise(Errc::parity_conflict, "even divisibility needs odd mu denominators; got " +
                                         to_string(m));
  }
  if (spec.m0_policy == M0Policy::explicit_value && spec.m0_explicit < 1)
    raise(Errc::invalid_argument, "explicit m0 must be positive");
}

Rat mu_square(const KTupleSpec& spec) {
  Rat s = 0;
  for (const auto& m : spec.mu) s += m * m;
  return s;
}

namespace {

Int lcm_denominators(const std::vector<Rat>& mu) {
  Int l = 1;
  for (const auto& m : mu) l = lcm(l, denominator(m));
  return l;
}

// Solution-lattice modulus of the power system, independent of the target.
Int power_system_modulus(const PrimeWindow& D, unsigned exponent, unsigned modulus_power,
                         unsigned scale) {
  const Int P = D.product();
  Int acc = 1;
  for (const auto& d : D.primes) {
    Int modulus = scale * (pow_int(d, modulus_power) - 1);
    Int coeff = powm(P / d, Int(exponent), modulus);
    Int g = gcd(coeff == 0 ? modulus : coeff, modulus);
    acc = lcm(acc, modulus / g);
  }
  return acc;
}

Int next_admissible_m0(const Int& at_least, const Int& denom_lcm, DivisibilityParity parity) {
  // Odd divisibility needs m0 even; even divisibility needs m0 odd.
  const int want_mod2 = parity == DivisibilityParity::odd ? 0 : 1;
  Int m = ceil_div(at_least, denom_lcm) * denom_lcm;
  for (int guard = 0; guard < 4; ++guard) {
    if (m % 2 == want_mod2) return m;
    m += denom_lcm;
  }
  raise(Errc::parity_conflict, "no multiple of " + denom_lcm.str() + " has the required parity");
}

struct AttemptFailure {
  std::string reason;
};

}  // namespace

KTupleResult synthesize(const KTupleSpec& spec, const SynthesisOptions& opts) {
  validate(spec);
  const Rat mu_sq = mu_square(spec);
  const Int denom_lcm = lcm_denominators(spec.mu);
  const unsigned s = static_cast<unsigned>(spec.mu.size());

  // Window tightness: the per-prime feasibility windows only intersect when
  // (d_max/d_min)^8 - 1 is small against the relative window width delta^2/240,
  // so the automatic alpha budgets a (conservative) fraction of it.
  Rat alpha = spec.alpha;
  std::int64_t limit = opts.search_limit;
  if (alpha == 0) {
    Rat budget = spec.delta * spec.delta / (Rat(8000) * mu_sq * (1 + spec.delta) * (1 + spec.delta));
    alpha = 1 + budget / 4;
    if (limit == 0) {
      Rat want = 40 / budget;
      Int w = ceil_rat(want);
      Int capped = std::min(w, Int(300'000'000));
      limit = std::max<std::int64_t>(100000, capped.convert_to<std::int64_t>());
    }
  }
  if (limit == 0) limit = 100'000'000;

  const int k = spec.k.convert_to<int>();
  PrimeWindow D = primes_in_window(k, alpha, limit);
  const Int P = D.product();
  const Int d_star = D.min();
  const Rat eps = spec.delta / Rat(d_star - 1);

  const Int c_modulus = power_system_modulus(D, 8, 1, 2);
  const Int cp_modulus = power_system_modulus(D, 16, 2, 2);
  const Int pd_star_8 = pow_int(P / d_star, 8);
  const Int pd_star_16 = pd_star_8 * pd_star_8;
  const Int g_a = pd_star_8 * c_modulus / (d_star - 1);
  const Int g_b = pd_star_16 * cp_modulus / (d_star * d_star - 1);

  Rng rng(opts.seed);

  auto attempt = [&](const Int& m0, SynthesisState& state) -> std::optional<AttemptFailure> {
    state.m0 = m0;
    const Int target_c = m0 - 3;

    // C: solve the congruence system with doubled moduli (forces every A_d
    // even for k >= 2), then shift the class to put A_{d*} next to eps*m0.
    std::vector<Congruence> sys;
    for (const auto& d : D.primes) {
      Int modulus = 2 * (d - 1);
      auto local = solve_linear_congruence(powm(P / d, Int(8), modulus), target_c, modulus);
      if (!local) return AttemptFailure{"C-congruence unsolvable at d = " + d.str()};
      sys.push_back(*local);
    }
    Congruence c_class = crt_solve_general(sys);
    const Rat c_target = (spec.delta * m0 + (m0 - 3)) / Rat(pd_star_8);
    Int C = c_class.residue + round_rat((c_target - c_class.residue) / Rat(c_class.modulus)) *
                                  c_class.modulus;
    if (C < 1) C = c_class.residue == 0 ? c_class.modulus : c_class.residue;
    state.c = C;
    state.c_modulus = c_class.modulus;

    // Exact A_d and per-prime windows.
    state.per_prime.clear();
    std::vector<Int> coeff8, coeff16;
    for (const auto& d : D.primes) {
      PerPrimeRecord rec;
      rec.d = d;
      const Int pd8 = pow_int(P / d, 8);
      coeff8.push_back(pd8);
      coeff16.push_back(pd8 * pd8);
      Int num = pd8 * C - target_c;
      if (num % (d - 1) != 0) return AttemptFailure{"A_d not integral at d = " + d.str()};
      rec.a = num / (d - 1);
      if (rec.a < kSquareParts)
        return AttemptFailure{"A_d = " + rec.a.str() + " below 16 at d = " + d.str() +
                              "; m0 too small"};
      if (rec.a % 2 != 0) return AttemptFailure{"A_d odd at d = " + d.str()};
      rec.window = feasibility_window(rec.a);
      if (rec.window.b_max < rec.window.b_min)
        return AttemptFailure{"empty feasibility window at d = " + d.str()};
      state.per_prime.push_back(std::move(rec));
    }

    // C': intersect the exact admissible intervals of every prime and land
    // in the middle of the intersection (the classical choice A^2/16 +
    // Delta/2 is this midpoint when the windows coincide).
    Int mu_m0_sq = 0;  // sum over j of (mu_j m0)^2, exact
    for (const auto& m : spec.mu) {
      Int mj = numerator(m) * m0 / denominator(m);
      mu_m0_sq += mj * mj;
    }
    const Int target_cp = 3 * (mu_m0_sq - 1);
    std::vector<Congruence> sysp;
    for (const auto& d : D.primes) {
      Int modulus = 2 * (d * d - 1);
      auto local = solve_linear_congruence(powm(P / d, Int(16), modulus), target_cp, modulus);
      if (!local) return AttemptFailure{"C'-congruence unsolvable at d = " + d.str()};
      sysp.push_back(*local);
    }
    Congruence cp_class = crt_solve_general(sysp);

    Rat lo = 0, hi = 0;
    bool first = true;
    for (size_t i = 0; i < D.primes.size(); ++i) {
      const Int& d = D.primes[i];
      const auto& rec = state.per_prime[i];
      Rat lo_d = Rat(rec.window.b_min * (d * d - 1) + target_cp, coeff16[i]);
      Rat hi_d = Rat(rec.window.b_max * (d * d - 1) + target_cp, coeff16[i]);
      lo = first ? lo_d : std::max(lo, lo_d);
      hi = first ? hi_d : std::min(hi, hi_d);
      first = false;
    }
    if (lo > hi)
      return AttemptFailure{"per-prime windows do not intersect (alpha too loose or m0 too small)"};
    const Rat cp_target = (lo + hi) / 2;
    Int Cp = cp_class.residue +
             round_rat((cp_target - cp_class.residue) / Rat(cp_class.modulus)) * cp_class.modulus;
    if (Rat(Cp) < lo || Rat(Cp) > hi)
      return AttemptFailure{"C' lattice step exceeds the window intersection; m0 too small"};
    state.c_prime = Cp;
    state.c_prime_modulus = cp_class.modulus;

    // Exact B_d, direct window membership, and the 16-square solves.
    for (size_t i = 0; i < D.primes.size(); ++i) {
      const Int& d = D.primes[i];
      auto& rec = state.per_prime[i];
      Int num = coeff16[i] * Cp - target_cp;
      if (num % (d * d - 1) != 0) return AttemptFailure{"B_d not integral at d = " + d.str()};
      rec.b = num / (d * d - 1);
      if (rec.b % 2 != 0) return AttemptFailure{"B_d odd at d = " + d.str()};
      if (!rec.window.contains(rec.b))
        return AttemptFailure{"B_d = " + rec.b.str() + " escapes the window at d = " + d.str()};
      rec.parts = sixteen_squares(rec.a, rec.b, rng);
    }
    state.delta_width = state.per_prime.front().window.b_max - state.per_prime.front().window.b_min;
    return std::nullopt;
  };

  SynthesisState state;
  state.window = D;
  state.p_product = P;
  state.epsilon = eps;
  state.search_limit_used = limit;

  std::optional<AttemptFailure> last_failure;
  bool solved = false;
  if (spec.m0_policy == M0Policy::explicit_value) {
    const Int m0 = spec.m0_explicit;
    if (m0 % denom_lcm != 0)
      raise(Errc::invalid_argument, "explicit m0 must be a multiple of the mu denominator lcm " +
                                        denom_lcm.str());
    const int want = spec.parity_target == DivisibilityParity::odd ? 0 : 1;
    if (m0 % 2 != want)
      raise(Errc::parity_conflict, "m0 parity contradicts the requested divisibility parity");
    state.attempts = 1;
    last_failure = attempt(m0, state);
    solved = !last_failure.has_value();
  } else {
    // Least admissible start from the granularity analysis (the C' step
    // must fit well inside the window width ~ (eps m0)^2 / 240), then
    // doubling until every exact check passes.
    Int lb = std::max<Int>((isqrt(1440 * g_b) + 1) * denominator(eps), 256 * g_a * denominator(eps));
    lb = ceil_div(lb, numerator(eps));
    lb = std::max<Int>(lb, 16 * denom_lcm);
    Int m0 = next_admissible_m0(lb, denom_lcm, spec.parity_target);
    for (int round = 0; round <= opts.max_doublings; ++round) {
      ++state.attempts;
      last_failure = attempt(m0, state);
      if (!last_failure) {
        solved = true;
        break;
      }
      m0 = next_admissible_m0(2 * m0, denom_lcm, spec.parity_target);
    }
  }
  if (!solved)
    raise(Errc::window_failure,
          (last_failure ? last_failure->reason : std::string("no attempt ran")) +
              " (try a larger m0 or a tighter alpha)");

  // Assemble towers and re-verify everything through the tower formulas.
  KTupleResult result;
  result.spec = spec;
  const Int m0 = state.m0;
  for (const auto& rec : state.per_prime) {
    CoverTower t;
    for (const auto& m : spec.mu)
      t.stages.push_back(CoverStage{2, numerator(m) * m0 / denominator(m)});
    for (const auto& x : rec.parts) t.stages.push_back(CoverStage{rec.d, x});
    result.towers.push_back(std::move(t));
  }

  const Int p16 = pow_int(P, 16);
  const Int two_s = pow_int(2, s);
  for (size_t i = 0; i < result.towers.size(); ++i) {
    CharNumbers cn = chern(result.towers[i]);
    if (i == 0)
      result.shared = cn;
    else if (!(cn == result.shared))
      raise(Errc::inconsistent_formulas, "towers disagree on characteristic numbers");
    Divisibility div = canonical_divisibility(result.towers[i]);
    const Int expected = pow_int(P / state.per_prime[i].d, 8) * state.c;
    if (div.value != expected)
      raise(Errc::inconsistent_formulas, "divisibility mismatch against (P/d)^8 C");
    const bool want_even = spec.parity_target == DivisibilityParity::even;
    if (div.spin != want_even)
      raise(Errc::inconsistent_formulas, "achieved divisibility parity contradicts the request");
    result.divisibilities.push_back(div.value);
  }
  for (size_t i = 0; i + 1 < result.divisibilities.size(); ++i)
    if (result.divisibilities[i] <= result.divisibilities[i + 1])
      raise(Errc::inconsistent_formulas, "divisibilities not strictly decreasing in d");

  if (result.shared.c1sq != two_s * p16 * state.c * state.c)
    raise(Errc::inconsistent_formulas, "c1^2 != 2^s P^16 C^2");
  if (3 * result.shared.sigma != -(two_s * p16 * state.c_prime))
    raise(Errc::inconsistent_formulas, "3 sigma != -2^s P^16 C'");
  result.achieved_sigma_ratio = Rat(state.c_prime, 3 * state.c * state.c);
  if (result.achieved_sigma_ratio != result.shared.neg_sigma_over_c1sq())
    raise(Errc::inconsistent_formulas, "sigma ratio disagrees between routes");

  result.state = std::move(state);
  return result;
}

SlopeReport slope_report(const KTupleResult& result) {
  SlopeReport r;
  r.slope = result.shared.slope();
  r.sigma_ratio = result.achieved_sigma_ratio;
  r.mu_sq = mu_square(result.spec);
  r.distance = boost::multiprecision::abs(r.sigma_ratio - r.mu_sq);
  return r;
}

}  // namespace geog
