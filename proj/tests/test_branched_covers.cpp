#include "geog/branched_covers.hpp"

#include "geog/errors.hpp"
#include "doctest.h"

#include <algorithm>
#include <random>

using namespace geog;

namespace {

CoverTower tower(std::initializer_list<std::pair<int, int>> stages) {
  CoverTower t;
  for (const auto& [d, m] : stages) t.stages.push_back(CoverStage{d, m});
  return t;
}

}  // namespace

TEST_CASE("chern values of small towers") {
  // Double plane over a sextic is the K3 surface.
  const CharNumbers k3 = chern(tower({{2, 3}}));
  CHECK(k3.c1sq == 0);
  CHECK(k3.sigma == -16);
  CHECK(k3.e == 24);
  CHECK(k3.chi == 2);

  const CharNumbers a = chern(tower({{2, 5}}));
  CHECK(a.c1sq == 8);
  CHECK(a.sigma == -48);
  CHECK(a.e == 76);
  CHECK(a.chi == 7);

  const CharNumbers b = chern(tower({{2, 3}, {2, 3}}));
  CHECK(b.c1sq == 36);
  CHECK(b.sigma == -68);
}

TEST_CASE("tower validation") {
  CHECK_THROWS_AS(chern(CoverTower{}), Error);
  CHECK_THROWS_AS(chern(tower({{1, 3}})), Error);
  CHECK_THROWS_AS(chern(tower({{2, 0}})), Error);
}

TEST_CASE("stage permutation leaves invariants fixed") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    CoverTower t;
    const int stages = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < stages; ++i)
      t.stages.push_back(CoverStage{Int(2 + rng() % 6), Int(1 + rng() % 9)});
    CoverTower shuffled = t;
    std::shuffle(shuffled.stages.begin(), shuffled.stages.end(), rng);
    CHECK(chern(t) == chern(shuffled));
  }
}

TEST_CASE("c1^2 factors through the total degree with a square quotient") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    CoverTower t;
    const int stages = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < stages; ++i)
      t.stages.push_back(CoverStage{Int(2 + rng() % 5), Int(1 + rng() % 7)});
    const CharNumbers cn = chern(t);
    const Int deg = total_degree(t);
    CHECK(cn.c1sq >= 0);
    CHECK(cn.c1sq % deg == 0);
    const Int quotient = cn.c1sq / deg;
    const Int root = isqrt(quotient);
    CHECK(root * root == quotient);
    CHECK(quotient == canonical_multiple(t) * canonical_multiple(t));
  }
}

TEST_CASE("canonical divisibility") {
  const Divisibility d = canonical_divisibility(tower({{2, 5}}));
  CHECK(d.value == 2);
  CHECK(d.spin);

  CHECK_THROWS_AS(canonical_divisibility(tower({{2, 3}})), Error);  // K3 boundary

  const Divisibility d2 = canonical_divisibility(tower({{3, 2}}));
  CHECK(d2.value == 1);
  CHECK_FALSE(d2.spin);
}

TEST_CASE("einstein flags") {
  const Verdict ke = einstein_flag(tower({{2, 5}}));
  CHECK(ke.status == VerdictStatus::ke_exists);
  CHECK(ke.replay());
  bool has_acd = false;
  for (const auto& r : ke.rule_chain) has_acd = has_acd || r.name == "acd-iterated-cover";
  CHECK(has_acd);

  CHECK(einstein_flag(tower({{2, 3}})).status == VerdictStatus::unknown);
  CHECK(einstein_flag(tower({{3, 2}})).status == VerdictStatus::ke_exists);
}
