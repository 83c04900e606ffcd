#include "geog/invariants.hpp"

#include "geog/errors.hpp"
#include "doctest.h"

#include <random>

using namespace geog;

TEST_CASE("coordinate conversions") {
  CharNumbers a = from_chi_c1sq(2, 1);
  CHECK(a.e == 23);
  CHECK(a.sigma == -15);

  CharNumbers k3 = from_chi_c1sq(2, 0);
  CHECK(k3.e == 24);
  CHECK(k3.sigma == -16);

  CharNumbers zero = from_chi_c1sq(0, 0);
  CHECK(zero.e == 0);
  CHECK(zero.sigma == 0);
}

TEST_CASE("round trip and divisibility invariants") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Int chi = Int(rng() % 2000) - 1000;
    const Int c1sq = Int(rng() % 2000) - 1000;
    CharNumbers cn = from_chi_c1sq(chi, c1sq);
    CHECK(cn.chi == chi);
    CHECK(cn.c1sq == c1sq);
    CHECK(cn.c1sq == 2 * cn.e + 3 * cn.sigma);
    CHECK((cn.e + cn.sigma) % 4 == 0);
    CHECK((cn.c1sq + cn.e) % 12 == 0);
    CHECK(from_e_sigma(cn.e, cn.sigma) == cn);
  }
  // The inverse map exists exactly on e + sigma = 0 (mod 4).
  CHECK_THROWS_AS(from_e_sigma(3, 0), Error);
  CHECK_THROWS_AS(from_e_sigma(4, 1), Error);
}

TEST_CASE("homeo types") {
  const CharNumbers cat = from_e_sigma(23, -15);
  CHECK(homeo_type(cat, Parity::non_spin) == HomeoType{3, 18, Parity::non_spin, true});

  const CharNumbers k3 = from_e_sigma(24, -16);
  CHECK(homeo_type(k3, Parity::spin) == HomeoType{3, 19, Parity::spin, true});

  CHECK(homeo_type(from_e_sigma(4, 0), Parity::non_spin) ==
        HomeoType{1, 1, Parity::non_spin, true});

  // b+ would be negative or fractional.
  CHECK_THROWS_AS(homeo_type(from_e_sigma(2, 4), Parity::non_spin), Error);
  // sigma = -15 is not 0 mod 16.
  CHECK_THROWS_AS(homeo_type(cat, Parity::spin), Error);

  // Equality through either coordinate route.
  const CharNumbers again = from_chi_c1sq(cat.chi, cat.c1sq);
  CHECK(homeo_type(again, Parity::non_spin) == homeo_type(cat, Parity::non_spin));
}

TEST_CASE("hitchin-thorpe classification") {
  CHECK(hitchin_thorpe(from_e_sigma(24, -16)) == HitchinThorpe::equality);
  CHECK(hitchin_thorpe(from_e_sigma(23, -15)) == HitchinThorpe::strict);
  CHECK(hitchin_thorpe(CharNumbers{0, 3, 0, 1}) == HitchinThorpe::violated);
}

TEST_CASE("dissolve target") {
  const HomeoType h{3, 18, Parity::non_spin, true};
  const DissolveTarget t = dissolve_target(h);
  CHECK(t == DissolveTarget{3, 18});
  CHECK(t.stabilized() == DissolveTarget{4, 18});

  CHECK(dissolve_target(HomeoType{3, 17, Parity::non_spin, true}) == DissolveTarget{3, 17});
  CHECK_THROWS_AS(dissolve_target(HomeoType{1, 1, Parity::spin, true}), Error);
}

TEST_CASE("exact slope ratios") {
  const CharNumbers cn = from_chi_c1sq(41, 153);
  CHECK(cn.slope() == Rat(153, 41));
  CHECK(cn.sigma_e_ratio() == Rat(175, 339));
  CHECK(cn.neg_sigma_over_c1sq() == Rat(175, 153));
}
