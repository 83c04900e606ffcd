#include "geog/example_suite.hpp"

#include "geog/invariants.hpp"
#include "geog/projective.hpp"
#include "geog/symplectic.hpp"

#include <functional>
#include <string>
#include <vector>

namespace geog {

namespace {

struct Group {
  std::string name;
  std::function<bool()> run;
};

bool wedge_closed_forms() {
  // 360 triples: the recursive fold must reproduce c1^2 = 9k + r - 8 and
  // chi = 3k + 2r + n - 1.
  for (Int k = 1; k <= 10; ++k)
    for (Int r = 0; r <= 8; ++r)
      for (Int n = 2; n <= 5; ++n) {
        SumRecipe recipe;
        recipe.runs.push_back(BlockRun{small_block(), k, 2});
        if (r > 0) recipe.runs.push_back(BlockRun{small_block(), r, 1});
        recipe.runs.push_back(BlockRun{elliptic_block(n), 1, 1});
        const CharNumbers cn = sum_invariants(recipe);
        if (cn.c1sq != 9 * k + r - 8) return false;
        if (cn.chi != 3 * k + 2 * r + n - 1) return false;
      }
  return true;
}

bool block_tables() {
  // Y(i) must come out of its construction: X(i) summed to K3 blown up
  // i+1 times along a genus i+2 surface.
  for (int i = 1; i <= 10; ++i) {
    const CharNumbers x = x_block(i).invariants();
    const CharNumbers k3b = k3_blownup_block(i + 1).invariants();
    const CharNumbers y = fold_genus_sum(x, k3b, i + 2);
    if (!(y == y_block(i).invariants())) return false;
    if (x.c1sq + x.e != 12 * x.chi) return false;
    if (9 * y.chi <= y.c1sq) return false;  // below the slope-9 line
  }
  return true;
}

bool product_families() {
  for (Int k = 0; k <= 5; ++k) {
    // Hypersurface of bidegree (5+k, 6) in P^1 x P^2.
    MultidegreeCI h;
    h.ambient.dims = {1, 2};
    h.degrees = {{5 + k, 6}};
    const CharNumbers a = ci_invariants(h).cn;
    if (a.c1sq != 9 * (17 + 5 * k)) return false;
    if (a.chi != 41 + 10 * k) return false;
    const CanonicalVector ka = canonical_vector(h);
    if (ka.divisibility != gcd(Int(k + 3), Int(3))) return false;

    // Complete intersection of (2,1) and (1+k, 6) in P^1 x P^3.
    MultidegreeCI ci;
    ci.ambient.dims = {1, 3};
    ci.degrees = {{2, 1}, {1 + k, 6}};
    const CharNumbers b = ci_invariants(ci).cn;
    if (!(a == b)) return false;
    const CanonicalVector kb = canonical_vector(ci);
    if (kb.divisibility != gcd(Int(k + 1), Int(3))) return false;
  }
  return true;
}

bool small_surface_types() {
  const CatalogEntry cat = catalog_lookup("catanese_1_2");
  const HomeoType h1 = homeo_type(cat.cn, Parity::non_spin);
  if (!(h1 == HomeoType{3, 18, Parity::non_spin, true})) return false;

  const CatalogEntry cd = catalog_lookup("catanese_debarre_2_2");
  const HomeoType h2 = homeo_type(cd.cn, Parity::non_spin);
  if (!(h2 == HomeoType{3, 17, Parity::non_spin, true})) return false;
  return true;
}

}  // namespace

bool run_example_suite(std::ostream& out) {
  const std::vector<Group> groups = {
      {"wedge-closed-forms (360 triples)", wedge_closed_forms},
      {"positive-block-tables (i=1..10)", block_tables},
      {"product-families (k=0..5)", product_families},
      {"small-surface-homeo-types", small_surface_types},
  };
  bool all_ok = true;
  for (const auto& g : groups) {
    const bool ok = g.run();
    all_ok = all_ok && ok;
    out << (ok ? "[ok]   " : "[FAIL] ") << g.name << "\n";
  }
  out << (all_ok ? "all example groups passed" : "example groups FAILED") << "\n";
  return all_ok;
}

}  // namespace geog
