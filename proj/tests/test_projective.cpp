#include "geog/projective.hpp"

#include "geog/errors.hpp"
#include "doctest.h"

using namespace geog;

namespace {

MultidegreeCI surface(std::vector<int> dims, std::vector<std::vector<Int>> degrees) {
  MultidegreeCI x;
  x.ambient.dims = std::move(dims);
  x.degrees = std::move(degrees);
  return x;
}

}  // namespace

TEST_CASE("hypersurface family in P1 x P2") {
  for (Int k = 0; k <= 5; ++k) {
    const auto x = surface({1, 2}, {{5 + k, 6}});
    const CharNumbers cn = ci_invariants(x).cn;
    CHECK(cn.c1sq == 9 * (17 + 5 * k));
    CHECK(cn.chi == 41 + 10 * k);
    const CanonicalVector kv = canonical_vector(x);
    CHECK(kv.coefficients == std::vector<Int>{3 + k, 3});
    CHECK(kv.divisibility == gcd(Int(k + 3), Int(3)));
    CHECK_FALSE(kv.ampleness_unverified);
  }
}

TEST_CASE("complete intersection family in P1 x P3") {
  for (Int k = 0; k <= 5; ++k) {
    const auto x = surface({1, 3}, {{2, 1}, {1 + k, 6}});
    const CharNumbers cn = ci_invariants(x).cn;
    CHECK(cn.c1sq == 9 * (17 + 5 * k));
    CHECK(cn.chi == 41 + 10 * k);
    const CanonicalVector kv = canonical_vector(x);
    CHECK(kv.coefficients == std::vector<Int>{1 + k, 3});
    CHECK(kv.divisibility == gcd(Int(k + 1), Int(3)));
  }
}

TEST_CASE("quartic in P3 is the K3 surface") {
  const auto x = surface({3}, {{4}});
  const CharNumbers cn = ci_invariants(x).cn;
  CHECK(cn.c1sq == 0);
  CHECK(cn.e == 24);
  const CanonicalVector kv = canonical_vector(x);
  CHECK(kv.coefficients == std::vector<Int>{0});
  CHECK(kv.divisibility == 0);
  CHECK(kv.spin);
}

TEST_CASE("factor swap symmetry") {
  const CharNumbers a = ci_invariants(surface({1, 2}, {{5, 6}})).cn;
  const CharNumbers b = ci_invariants(surface({2, 1}, {{6, 5}})).cn;
  CHECK(a == b);

  const CharNumbers c = ci_invariants(surface({1, 1, 1}, {{2, 3, 4}})).cn;
  const CharNumbers d = ci_invariants(surface({1, 1, 1}, {{4, 2, 3}})).cn;
  CHECK(c == d);
}

TEST_CASE("dimension and degree validation") {
  CHECK_THROWS_AS(ci_invariants(surface({1, 2}, {{1, 1}, {2, 2}})), Error);  // dimension 1
  CHECK_THROWS_AS(ci_invariants(surface({3}, {})), Error);
  CHECK_THROWS_AS(ci_invariants(surface({1, 3}, {{0, 0}, {1, 6}})), Error);  // zero class

  // A zero entry in one multidegree only downgrades the certificate.
  const auto kv = canonical_vector(surface({1, 3}, {{0, 2}, {3, 3}}));
  CHECK(kv.ampleness_unverified);
}

TEST_CASE("the twelve-chi identity holds across inputs") {
  for (const auto& x : {surface({1, 2}, {{2, 4}}), surface({2, 2}, {{1, 2}, {3, 1}}),
                        surface({1, 1, 2}, {{1, 2, 2}, {2, 1, 1}})}) {
    const CharNumbers cn = ci_invariants(x).cn;
    CHECK(cn.c1sq + cn.e == 12 * cn.chi);
  }
}

TEST_CASE("catalog") {
  const CatalogEntry cat = catalog_lookup("catanese_1_2");
  CHECK(cat.cn.chi == 2);
  CHECK(cat.cn.c1sq == 1);
  CHECK(cat.ke_exists);
  CHECK(homeo_type(cat.cn, cat.parity) == HomeoType{3, 18, Parity::non_spin, true});

  const CatalogEntry cd = catalog_lookup("catanese_debarre_2_2");
  CHECK(cd.cn.c1sq == 2);
  CHECK(homeo_type(cd.cn, cd.parity) == HomeoType{3, 17, Parity::non_spin, true});

  CHECK_THROWS_AS(catalog_lookup("barlow"), Error);
  CHECK(catalog_names().size() == 2);
}
