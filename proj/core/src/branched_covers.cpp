#include "geog/branched_covers.hpp"

#include "geog/errors.hpp"

namespace geog {

void validate(const CoverTower& t) {
  if (t.stages.empty()) raise(Errc::invalid_argument, "tower needs at least one stage");
  for (const auto& s : t.stages) {
    if (s.degree < 2) raise(Errc::invalid_argument, "stage degree must be >= 2");
    if (s.curve_param < 1) raise(Errc::invalid_argument, "stage curve parameter must be >= 1");
  }
}

Int total_degree(const CoverTower& t) {
  Int p = 1;
  for (const auto& s : t.stages) p *= s.degree;
  return p;
}

Int canonical_multiple(const CoverTower& t) {
  Int sum = 0;
  for (const auto& s : t.stages) sum += (s.degree - 1) * s.curve_param;
  return sum - 3;
}

CharNumbers chern(const CoverTower& t) {
  validate(t);
  const Int deg = total_degree(t);
  const Int ell = canonical_multiple(t);
  Int quad = 0;  // sum (d_j^2 - 1) m_j^2
  for (const auto& s : t.stages) quad += (s.degree * s.degree - 1) * s.curve_param * s.curve_param;

  CharNumbers cn;
  cn.c1sq = deg * ell * ell;
  const Int e_twice = deg * (ell * ell + quad - 3);
  const Int sigma_thrice = -deg * (quad - 3);
  if (e_twice % 2 != 0 || sigma_thrice % 3 != 0)
    raise(Errc::inconsistent_formulas, "tower invariants are not integral");
  cn.e = e_twice / 2;
  cn.sigma = sigma_thrice / 3;
  if ((cn.e + cn.sigma) % 4 != 0)
    raise(Errc::inconsistent_formulas, "e + sigma not divisible by 4 for a tower");
  cn.chi = (cn.e + cn.sigma) / 4;
  if (cn.c1sq + cn.e != 12 * cn.chi)
    raise(Errc::inconsistent_formulas, "c1^2 + c2 != 12 chi for a tower");
  return cn;
}

Divisibility canonical_divisibility(const CoverTower& t) {
  validate(t);
  const Int ell = canonical_multiple(t);
  if (ell < 1)
    raise(Errc::not_general_type,
          "canonical multiple " + ell.str() + " < 1; not of general type with ample canonical class");
  return Divisibility{ell, ell % 2 == 0};
}

Verdict einstein_flag(const CoverTower& t) {
  validate(t);
  Verdict v;
  const Int ell = canonical_multiple(t);
  v.rule_chain.push_back(
      Rule{"acd-iterated-cover", "flag", 0, 0, true});
  if (ell >= 1) {
    v.status = VerdictStatus::ke_exists;
    v.rule_chain.push_back(Rule{"ample-canonical", "lhs >= rhs", ell, 1, true});
    v.rule_chain.push_back(Rule{"kaehler-einstein-negative-calabi", "flag", 0, 0, true});
    v.assumptions = {"ample-canonical (stated assumption for non-small parameters)", "minimal"};
  } else {
    v.status = VerdictStatus::unknown;
    v.rule_chain.push_back(Rule{"ample-canonical", "lhs >= rhs", ell, 1, false});
  }
  return v;
}

}  // namespace geog
