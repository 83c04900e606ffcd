#include "geog/einstein.hpp"

#include "geog/errors.hpp"
#include "geog/projective.hpp"

#include <algorithm>

namespace geog {

bool blowup_obstruction(const Int& minimal_c1sq, const Int& b, bool strict) {
  if (minimal_c1sq <= 0)
    raise(Errc::invalid_argument, "blowup threshold needs minimal c1^2 > 0 (nonzero SW assumed)");
  if (b < 0) raise(Errc::invalid_argument, "negative blowup count");
  return strict ? 3 * b > minimal_c1sq : 3 * b >= minimal_c1sq;
}

bool connected_sum_obstruction(const std::vector<Int>& summand_c1sq,
                               const std::vector<Int>& summand_bplus, const Int& k_bars) {
  if (summand_c1sq.size() != summand_bplus.size())
    raise(Errc::wrong_arity, "c1^2 and b+ lists differ in length");
  if (summand_c1sq.size() != 2 && summand_c1sq.size() != 4)
    raise(Errc::wrong_arity, "obstruction applies to 2 or 4 summands, got " +
                                 std::to_string(summand_c1sq.size()));
  if (k_bars < 0) raise(Errc::invalid_argument, "k must be >= 0");
  for (const auto& bp : summand_bplus)
    if (((bp % 4) + 4) % 4 != 3)
      raise(Errc::congruence_violation, "every summand needs b+ = 3 (mod 4); got " + bp.str());

  Int total_c1sq = 0, total_bplus = 0;
  for (size_t i = 0; i < summand_c1sq.size(); ++i) {
    total_c1sq += summand_c1sq[i];
    total_bplus += summand_bplus[i];
  }
  if (summand_c1sq.size() == 2) return 3 * k_bars >= total_c1sq - 12;
  return 3 * k_bars >= total_c1sq - 36 && total_bplus % 8 != 0;
}

namespace {

Verdict obstructed_blowup_verdict(const Int& minimal_c1sq, const Int& b) {
  Verdict v;
  v.status = VerdictStatus::obstructed;
  v.rule_chain.push_back(Rule{"minimal-symplectic-sw-nonzero", "flag", 0, 0, true});
  v.rule_chain.push_back(Rule{"blowup-threshold", "3*lhs >= rhs", b, minimal_c1sq, true});
  v.assumptions = {"SW-nontrivial (minimal symplectic, cited)",
                   "infinitely many structures: log-transform SW bookkeeping (cited)"};
  return v;
}

}  // namespace

MainTheoremReport assemble_main_theorem(const Int& k, const KTupleSpec& spec_in,
                                        const MatchOptions& opts) {
  KTupleSpec spec = spec_in;
  spec.k = k;
  validate(spec);
  if (spec.parity_target != DivisibilityParity::odd)
    raise(Errc::invalid_argument, "the matcher needs odd divisibilities (non-spin types)");

  // Feasibility of the X side needs slope <= 6, and the planner ceiling
  // (the best Y(i) slope available) must clear 3/2 of it.
  const Rat mu_sq = mu_square(spec);
  const Rat target_slope = Rat(8) / (1 + mu_sq);
  if (target_slope > 6)
    raise(Errc::slope_out_of_range, "target slope " + to_string(target_slope) +
                                        " exceeds 6; pick mu with mu^2 >= 1/3");

  MainTheoremReport report;
  report.k = k;
  report.tuple = synthesize(spec, opts.synthesis);
  report.slope = report.tuple.shared.slope();
  if (report.slope > 6)
    raise(Errc::slope_out_of_range,
          "achieved slope " + to_string(report.slope) + " exceeds 6; shrink delta or alpha");
  const CharNumbers ceiling = y_block(opts.planner.i_max).invariants();
  if (3 * report.slope > 2 * Rat(ceiling.c1sq, ceiling.chi))
    raise(Errc::slope_out_of_range, "planner ceiling c1^2/chi = " +
                                        to_string(Rat(ceiling.c1sq, ceiling.chi)) +
                                        " cannot reach 3/2 of the achieved slope");

  report.shared_homeo = homeo_type(report.tuple.shared, Parity::non_spin);

  for (size_t i = 0; i < report.tuple.towers.size(); ++i) {
    ZEntry z;
    z.tower = report.tuple.towers[i];
    z.divisibility = report.tuple.divisibilities[i];
    z.verdict = einstein_flag(z.tower);
    if (z.verdict.status != VerdictStatus::ke_exists)
      raise(Errc::inconsistent_formulas, "synthesized tower lost its KE verdict");
    report.z_list.push_back(std::move(z));
  }

  const Int chi_z = report.tuple.shared.chi;
  const Int c1_z = report.tuple.shared.c1sq;
  Int c1n = ceil_div(3 * c1_z, 2);
  for (int probe = 0; probe < opts.scan_width &&
                      static_cast<int>(report.x_list.size()) < opts.max_x_entries;
       ++probe, ++c1n) {
    SumRecipe recipe;
    try {
      recipe = plan_point(chi_z, c1n, opts.planner);
    } catch (const Error& err) {
      if (err.code() == Errc::unreachable) continue;
      throw;
    }
    const Int b = c1n - c1_z;
    if (!blowup_obstruction(c1n, b)) continue;

    XEntry x;
    x.minimal_recipe = recipe;
    x.blowups = b;
    x.minimal_cn = sum_invariants(recipe);

    SumRecipe blown = recipe;
    blown.blowups += b;
    const CharNumbers cn = sum_invariants(blown);
    if (!(cn == report.tuple.shared))
      raise(Errc::inconsistent_formulas, "blown-up recipe missed the shared invariants");
    if (!(homeo_type(cn, Parity::non_spin) == report.shared_homeo))
      raise(Errc::inconsistent_formulas, "blown-up recipe missed the shared homeo type");

    for (auto member : infinite_family(recipe, opts.family_multiplicities)) {
      member.blowups += b;
      x.family.push_back(std::move(member));
    }
    x.verdict = obstructed_blowup_verdict(c1n, b);
    report.x_list.push_back(std::move(x));
  }
  if (report.x_list.empty())
    raise(Errc::slope_out_of_range,
          "no planner recipe reaches c1^2 >= " + Int(ceil_div(3 * c1_z, 2)).str() + " at chi = " +
              chi_z.str());

  // No descriptor may carry both verdicts.
  for (const auto& z : report.z_list)
    if (z.verdict.status == VerdictStatus::obstructed)
      raise(Errc::inconsistent_formulas, "a tower was marked obstructed");
  return report;
}

namespace {

struct WitnessBlock {
  SumRecipe recipe;
  std::string description;
};

// A minimal block with the requested invariants: planner first, then the
// chi = 2 specials the planner does not emit.
std::optional<WitnessBlock> minimal_witness(const Int& chi, const Int& c1sq,
                                            const PlannerConfig& cfg) {
  try {
    return WitnessBlock{plan_point(chi, c1sq, cfg), "planner recipe"};
  } catch (const Error& err) {
    if (err.code() != Errc::unreachable && err.code() != Errc::invalid_argument) throw;
  }
  if (chi == 2 && c1sq == 1)
    return WitnessBlock{single_block_recipe(small_block()), "the chi=2, c1^2=1 symplectic block"};
  if (chi == 2 && c1sq == 2) {
    // General-type catalog surface; minimal Kaehler, so SW is nonzero.
    catalog_lookup("catanese_debarre_2_2");
    SumRecipe r;  // not a sum; recorded as an empty recipe with a description
    return WitnessBlock{r, "catalog surface catanese_debarre_2_2"};
  }
  return std::nullopt;
}

PqVerdict unknown_verdict(const std::string& reason, Rule why) {
  PqVerdict out;
  out.verdict.status = VerdictStatus::unknown;
  out.verdict.rule_chain.push_back(std::move(why));
  out.verdict.assumptions = {reason};
  return out;
}

}  // namespace

PqVerdict pq_structures(const Int& p, const Int& q, const PqOptions& opts) {
  if (p < 1 || q < 0) raise(Errc::invalid_argument, "need p >= 1 and q >= 0");

  if (p % 8 == 0)
    return unknown_verdict("p = 0 (mod 8) is outside the obstruction's reach",
                           Rule{"p-not-divisible-by-8", "lhs != rhs", p % 8, 0, false});

  // Invariants of p CP2 # q CP2bar.
  const Int e = 2 + p + q;
  const Int sigma = p - q;
  const Int c1_target = 2 * e + 3 * sigma;  // 4 + 5p - q

  if (p % 2 == 1) {
    const Int chi = (p + 1) / 2;
    Int lo = std::max<Int>(std::max<Int>(1, c1_target + 1), ceil_div(3 * c1_target, 2));
    for (Int c1n = lo; c1n < lo + opts.scan_width; ++c1n) {
      auto w = minimal_witness(chi, c1n, opts.planner);
      if (!w) continue;
      const Int b = c1n - c1_target;
      if (!blowup_obstruction(c1n, b)) continue;
      PqVerdict out;
      out.verdict = obstructed_blowup_verdict(c1n, b);
      out.verdict.rule_chain.push_back(
          Rule{"freedman-homeo-match", "lhs == rhs", 12 * chi - c1_target, e, true});
      out.witness = PqWitness{"blowup", w->description + " blown up " + b.str() + " times",
                              w->recipe.runs.empty() ? std::nullopt
                                                     : std::optional<SumRecipe>(w->recipe),
                              b, 0};
      return out;
    }
    return unknown_verdict("no minimal witness below the scan ceiling",
                           Rule{"witness-found", "flag", 0, 0, false});
  }

  const bool four_route = p % 8 == 4;  // p = 2 mod 4 takes the two-summand route
  const Int k3_copies = four_route ? 3 : 1;
  const Int chi1 = four_route ? (p - 8) / 2 : (p - 2) / 2;
  const Int bplus1 = 2 * chi1 - 1;
  if (chi1 < 2)
    return unknown_verdict("no summand with b+ = " + bplus1.str() + " available",
                           Rule{"chi1 >= 2", "lhs >= rhs", chi1, 2, false});

  for (Int c1 = 0; c1 < opts.scan_width; ++c1) {
    SumRecipe recipe;
    try {
      recipe = plan_point(chi1, c1, opts.planner);
    } catch (const Error& err) {
      if (err.code() == Errc::unreachable) continue;
      throw;
    }
    // Bars needed to land exactly on (p, q): b- of the sum plus k equals q.
    const Int bminus1 = 10 * chi1 - c1 - 1;
    const Int k_bars = q - bminus1 - k3_copies * 19;
    if (k_bars < 0) continue;
    std::vector<Int> c1s{c1}, bps{bplus1};
    for (Int i = 0; i < k3_copies; ++i) {
      c1s.push_back(0);
      bps.push_back(3);
    }
    if (!connected_sum_obstruction(c1s, bps, k_bars)) continue;

    PqVerdict out;
    out.verdict.status = VerdictStatus::obstructed;
    out.verdict.rule_chain.push_back(Rule{"bplus-congruence", "lhs == rhs", ((bplus1 % 4) + 4) % 4,
                                          3, true});
    out.verdict.rule_chain.push_back(Rule{"connected-sum-bound", "lhs >= rhs", 3 * k_bars,
                                          c1 - (four_route ? 36 : 12), true});
    if (four_route)
      out.verdict.rule_chain.push_back(
          Rule{"total-bplus-not-0-mod-8", "lhs != rhs", (bplus1 + 9) % 8, 0, true});
    out.verdict.rule_chain.push_back(Rule{"bauer-furuta-monopole-classes", "flag", 0, 0, true});
    out.verdict.assumptions = {"infinitely many structures: log-transform basic classes (cited)"};
    out.witness = PqWitness{four_route ? "four-summand" : "two-summand",
                            recipe.label() + " # " + k3_copies.str() + " K3 # " + k_bars.str() +
                                " CP2bar",
                            recipe, 0, k_bars};
    return out;
  }
  return unknown_verdict("no summand choice satisfies the bar-count bound",
                         Rule{"witness-found", "flag", 0, 0, false});
}

}  // namespace geog
