#include "geog/synthesis.hpp"

#include "geog/errors.hpp"
#include "geog/json_io.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <numeric>

using namespace geog;

namespace {

void check_parts(const std::vector<Int>& xs, const Int& a, const Int& b) {
  REQUIRE(xs.size() == 16);
  Int sum = 0, sumsq = 0;
  for (const auto& x : xs) {
    CHECK(x >= 1);
    sum += x;
    sumsq += x * x;
  }
  CHECK(sum == a);
  CHECK(sumsq == b);
}

}  // namespace

TEST_CASE("balanced minima") {
  CHECK(min_sum_squares(16) == 16);
  CHECK(min_sum_squares(18) == 22);
  CHECK(min_sum_squares(32) == 64);
  CHECK(min_sum_squares(33) == 67);
}

TEST_CASE("feasibility windows") {
  const auto w32 = feasibility_window(32);
  CHECK(w32.b_min == 64);
  CHECK(w32.contains(66));
  CHECK(w32.contains(68));

  const auto w16 = feasibility_window(16);
  CHECK(w16.b_min == 16);
  CHECK(w16.contains(16));

  // Too tight to hold anything: the window may be empty, never wrong.
  const auto w18 = feasibility_window(18);
  CHECK(w18.b_min > w18.b_max);

  const Int big = Int(2) * 1000000000;
  CHECK(feasibility_window(big).b_max == big * big / 15);

  // The balanced bottom obeys the documented A^2/16 + 4 cap.
  for (Int a = 16; a <= 200; ++a) {
    const auto w = feasibility_window(a);
    CHECK(16 * w.b_min <= a * a + 16 * (w.kappa * a + w.kappa_prime));
  }
}

TEST_CASE("sixteen squares: pinned examples") {
  Rng rng(1);
  const auto ones = sixteen_squares(16, 16, rng);
  CHECK(std::count(ones.begin(), ones.end(), Int(1)) == 16);

  const auto xs = sixteen_squares(18, 22, rng);
  check_parts(xs, 18, 22);
  CHECK(std::count(xs.begin(), xs.end(), Int(2)) == 2);
  CHECK(std::count(xs.begin(), xs.end(), Int(1)) == 14);

  check_parts(sixteen_squares(32, 68, rng), 32, 68);
}

TEST_CASE("sixteen squares: errors") {
  Rng rng(1);
  CHECK_THROWS_AS(sixteen_squares(18, 21, rng), Error);  // parity
  CHECK_THROWS_AS(sixteen_squares(16, 50, rng), Error);  // only (16,16) exists
  CHECK_THROWS_AS(sixteen_squares(10, 10, rng), Error);  // fewer than 16 parts
}

TEST_CASE("sixteen squares cover their window; window is sound") {
  oracle::SixteenPartOracle dp(16, 64, 300);
  Rng rng(3);
  for (Int a = 16; a <= 64; a += 1) {
    const auto w = feasibility_window(a);
    for (Int b = w.b_min; b <= w.b_max; ++b) {
      if ((b - a) % 2 != 0) continue;
      CHECK(dp.feasible(16, a.convert_to<int>(), b.convert_to<int>()));
      check_parts(sixteen_squares(a, b, rng), a, b);
    }
  }
  // Odd sums work through the consecutive-pair scheme.
  check_parts(sixteen_squares(17, 19, rng), 17, 19);
  check_parts(sixteen_squares(33, 71, rng), 33, 71);
}

TEST_CASE("spec validation") {
  KTupleSpec spec;
  spec.k = 2;
  spec.mu = {Rat(1, 2), Rat(1, 2)};
  spec.parity_target = DivisibilityParity::even;
  CHECK_THROWS_AS(validate(spec), Error);  // even denominators

  spec.parity_target = DivisibilityParity::odd;
  CHECK_NOTHROW(validate(spec));

  spec.mu = {Rat(1, 3), Rat(1, 3)};
  CHECK_THROWS_AS(validate(spec), Error);  // does not sum to 1

  spec.mu = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  spec.k = 1;
  CHECK_THROWS_AS(validate(spec), Error);  // k >= 2
}

TEST_CASE("synthesis end to end, mu^2 = 1/2") {
  KTupleSpec spec;
  spec.k = 2;
  spec.mu = {Rat(1, 2), Rat(1, 2)};
  spec.delta = Rat(1, 10);
  SynthesisOptions opts;
  opts.seed = 2024;

  const KTupleResult r = synthesize(spec, opts);
  REQUIRE(r.towers.size() == 2);

  // Identical invariants, recomputed through the tower formulas.
  CHECK(chern(r.towers[0]) == r.shared);
  CHECK(chern(r.towers[1]) == r.shared);

  // Divisibilities distinct, odd, decreasing.
  CHECK(r.divisibilities[0] > r.divisibilities[1]);
  for (const auto& d : r.divisibilities) CHECK(d % 2 == 1);

  // Both A_d and B_d are even with B inside the window.
  for (const auto& rec : r.state.per_prime) {
    CHECK(rec.a % 2 == 0);
    CHECK(rec.b % 2 == 0);
    CHECK(rec.window.contains(rec.b));
    CHECK(rec.a >= 16);
  }

  // m0 parity: odd divisibility forces even m0, a multiple of 2.
  CHECK(r.state.m0 % 2 == 0);

  const SlopeReport sr = slope_report(r);
  CHECK(sr.mu_sq == Rat(1, 2));
  CHECK(sr.sigma_ratio == r.achieved_sigma_ratio);
  CHECK(sr.slope == Rat(8) / (1 + sr.sigma_ratio));
}

TEST_CASE("synthesis determinism") {
  KTupleSpec spec;
  spec.k = 2;
  spec.mu = {Rat(1, 2), Rat(1, 2)};
  spec.delta = Rat(1, 10);
  SynthesisOptions opts;
  opts.seed = 77;
  const KTupleResult a = synthesize(spec, opts);
  const KTupleResult b = synthesize(spec, opts);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("explicit m0 policy is validated") {
  KTupleSpec spec;
  spec.k = 2;
  spec.mu = {Rat(1, 2), Rat(1, 2)};
  spec.m0_policy = M0Policy::explicit_value;
  spec.m0_explicit = 3;  // not a multiple of 2, wrong parity anyway
  CHECK_THROWS_AS(synthesize(spec), Error);

  spec.m0_explicit = 10;  // admissible but far too small: loud failure
  CHECK_THROWS_AS(synthesize(spec), Error);
}
