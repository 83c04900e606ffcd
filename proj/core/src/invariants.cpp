#include "geog/invariants.hpp"

#include "geog/errors.hpp"

namespace geog {

Rat CharNumbers::slope() const {
  if (chi == 0) raise(Errc::invalid_argument, "slope undefined at chi = 0");
  return Rat(c1sq, chi);
}

Rat CharNumbers::sigma_e_ratio() const {
  if (e == 0) raise(Errc::invalid_argument, "|sigma|/e undefined at e = 0");
  return Rat(abs(sigma), e);
}

Rat CharNumbers::neg_sigma_over_c1sq() const {
  if (c1sq == 0) raise(Errc::invalid_argument, "-sigma/c1^2 undefined at c1^2 = 0");
  return Rat(-sigma, c1sq);
}

CharNumbers from_chi_c1sq(const Int& chi, const Int& c1sq) {
  CharNumbers cn;
  cn.chi = chi;
  cn.c1sq = c1sq;
  cn.e = 12 * chi - c1sq;
  cn.sigma = c1sq - 8 * chi;
  return cn;
}

CharNumbers from_e_sigma(const Int& e, const Int& sigma) {
  if ((e + sigma) % 4 != 0)
    raise(Errc::non_realizable, "e + sigma = " + Int(e + sigma).str() + " is not divisible by 4");
  CharNumbers cn;
  cn.e = e;
  cn.sigma = sigma;
  cn.chi = (e + sigma) / 4;
  cn.c1sq = 2 * e + 3 * sigma;
  return cn;
}

HomeoType homeo_type(const CharNumbers& cn, Parity parity) {
  if (cn.e < 2)
    raise(Errc::non_realizable, "e = " + cn.e.str() + " < 2 admits no simply connected closed type");
  const Int two_bplus = cn.e - 2 + cn.sigma;
  const Int two_bminus = cn.e - 2 - cn.sigma;
  if (two_bplus < 0 || two_bminus < 0 || two_bplus % 2 != 0)
    raise(Errc::non_realizable,
          "no non-negative integral (b+, b-) solves e = " + cn.e.str() + ", sigma = " + cn.sigma.str());
  if (parity == Parity::spin && cn.sigma % 16 != 0)
    raise(Errc::rokhlin_violation,
          "spin type requires sigma = 0 (mod 16); got sigma = " + cn.sigma.str());
  return HomeoType{two_bplus / 2, two_bminus / 2, parity, true};
}

HitchinThorpe hitchin_thorpe(const CharNumbers& cn) {
  const Int lhs = 2 * cn.e, rhs = 3 * abs(cn.sigma);
  if (lhs > rhs) return HitchinThorpe::strict;
  if (lhs == rhs) return HitchinThorpe::equality;
  return HitchinThorpe::violated;
}

DissolveTarget dissolve_target(const HomeoType& ht) {
  if (ht.parity == Parity::spin)
    raise(Errc::spin_input, "a spin manifold is never a sum of CP^2 and CP^2bar copies");
  return DissolveTarget{ht.b_plus, ht.b_minus};
}

}  // namespace geog
