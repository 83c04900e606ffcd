#include "geog/number_theory.hpp"

#include "geog/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace geog;

TEST_CASE("prime windows") {
  const PrimeWindow w = primes_in_window(2, Rat(3, 2), 100);
  CHECK(w.primes == std::vector<Int>{11, 13});
  CHECK(w.satisfies_window());

  const PrimeWindow single = primes_in_window(1, Rat(101, 100), 10);
  CHECK(single.primes == std::vector<Int>{3});
  CHECK(single.satisfies_window());

  CHECK_THROWS_AS(primes_in_window(2, Rat(21, 20), 100), Error);

  // Every ordered pair of a returned window passes the exact check.
  const PrimeWindow w3 = primes_in_window(3, Rat(6, 5), 10000);
  CHECK(w3.primes.size() == 3);
  for (const auto& d : w3.primes)
    for (const auto& dp : w3.primes)
      if (d != dp) CHECK((d + 1) * denominator(w3.alpha) < numerator(w3.alpha) * (dp - 1));
}

TEST_CASE("strict CRT") {
  CHECK_THROWS_AS(crt_solve({{1, 2}, {3, 4}}), Error);
  CHECK(crt_solve({{2, 3}, {3, 5}}) == Congruence{8, 15});
  CHECK(crt_solve({{0, 7}}) == Congruence{0, 7});

  const Congruence c = crt_solve({{2, 3}, {3, 5}, {5, 11}});
  CHECK(c.modulus == 165);
  CHECK(c.residue % 3 == 2);
  CHECK(c.residue % 5 == 3);
  CHECK(c.residue % 11 == 5);
}

TEST_CASE("general congruence merging") {
  // Consistent non-coprime pair collapses to the finer class.
  CHECK(crt_solve_general({{1, 2}, {3, 4}}) == Congruence{3, 4});
  CHECK_THROWS_AS(crt_solve_general({{0, 2}, {3, 4}}), Error);

  auto lin = solve_linear_congruence(6, 4, 10);
  REQUIRE(lin.has_value());
  CHECK((6 * lin->residue - 4) % 10 == 0);
  CHECK(lin->modulus == 5);
  CHECK_FALSE(solve_linear_congruence(6, 3, 10).has_value());
}

TEST_CASE("power systems for C and C'") {
  PrimeWindow d35{{3, 5}, Rat(4)};
  const Congruence c = solve_C(d35, 7);
  CHECK(c == Congruence{3, 4});

  PrimeWindow d3{{3}, Rat(4)};
  CHECK(solve_C(d3, 0) == Congruence{0, 2});

  // No closed value asserted; substitute back instead.
  PrimeWindow d1113{{11, 13}, Rat(3, 2)};
  const Int p = d1113.product();
  const Congruence cc = solve_C(d1113, 5);
  for (const auto& d : d1113.primes)
    CHECK(powm(p / d, Int(8), d - 1) * cc.residue % (d - 1) == 5 % (d - 1));

  const Congruence cp = solve_Cprime(d1113, 42);
  for (const auto& d : d1113.primes) {
    const Int mod = d * d - 1;
    CHECK(powm(p / d, Int(16), mod) * cp.residue % mod == 42 % mod);
  }
}

TEST_CASE("probable primes") {
  Rng rng(1);
  CHECK(is_probable_prime(2, rng));
  CHECK(is_probable_prime(97, rng));
  CHECK_FALSE(is_probable_prime(1, rng));
  CHECK_FALSE(is_probable_prime(561, rng));  // Carmichael
  CHECK(is_probable_prime(Int("170141183460469231731687303715884105727"), rng));  // 2^127 - 1
  CHECK_FALSE(is_probable_prime(Int("170141183460469231731687303715884105725"), rng));
}

TEST_CASE("modular square roots and two squares") {
  Rng rng(5);
  for (Int p : {Int(13), Int(17), Int(29), Int(101), Int(65537), Int(1000003)}) {
    if (p % 4 == 1) {
      auto root = sqrt_mod(p - 1, p, rng);
      REQUIRE(root.has_value());
      CHECK((*root * *root) % p == p - 1);
      auto cd = two_square_prime(p, rng);
      REQUIRE(cd.has_value());
      CHECK((*cd)[0] * (*cd)[0] + (*cd)[1] * (*cd)[1] == p);
    }
  }
  CHECK_FALSE(sqrt_mod(2, 7, rng).has_value());  // 2 is a non-residue mod 7
  auto r = sqrt_mod(2, 17, rng);
  REQUIRE(r.has_value());
  CHECK((*r * *r) % 17 == 2);
}

TEST_CASE("four squares: pinned values") {
  CHECK(four_square(0) == std::array<Int, 4>{0, 0, 0, 0});
  CHECK(four_square(7) == std::array<Int, 4>{2, 1, 1, 1});

  // Above the brute-force threshold: randomized path, exact verification.
  const Int n = Int(1000003);
  const auto q = four_square(n, 42);
  CHECK(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == n);
}

TEST_CASE("four squares: random 64-bit trials") {
  Rng rng(99);
  std::mt19937_64 gen(3);
  for (int i = 0; i < 40; ++i) {
    Int n = Int(gen());
    auto q = four_square(n, rng);
    CHECK(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == n);
    CHECK(q[0] >= q[1]);
    CHECK(q[1] >= q[2]);
    CHECK(q[2] >= q[3]);
    CHECK(q[3] >= 0);
  }
}

TEST_CASE("four squares agree with the oracle on a sample") {
  oracle::TwoSquareTable table(2048);
  for (std::uint64_t n = 0; n <= 2048; ++n) {
    auto expect = oracle::four_square(n, table);
    REQUIRE(expect.has_value());
    auto got = four_square(Int(n), 7);
    CHECK(got[0] * got[0] + got[1] * got[1] + got[2] * got[2] + got[3] * got[3] == Int(n));
  }
}

TEST_CASE("determinism under a fixed seed") {
  const Int n = Int("123456789012345678901");
  CHECK(four_square(n, 2024) == four_square(n, 2024));
}
