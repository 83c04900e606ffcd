#include "geog/json_io.hpp"

#include "geog/errors.hpp"

namespace geog {

json to_json(const Int& v) { return v.str(); }
json to_json(const Rat& v) { return to_string(v); }

Int int_from_json(const json& j) { return Int(j.get<std::string>()); }
Rat rat_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json to_json(const CharNumbers& cn) {
  return json{{"chi", to_json(cn.chi)},
              {"c1sq", to_json(cn.c1sq)},
              {"e", to_json(cn.e)},
              {"sigma", to_json(cn.sigma)}};
}

CharNumbers char_numbers_from_json(const json& j) {
  return from_chi_c1sq(int_from_json(j.at("chi")), int_from_json(j.at("c1sq")));
}

json to_json(const HomeoType& ht) {
  return json{{"b_plus", to_json(ht.b_plus)},
              {"b_minus", to_json(ht.b_minus)},
              {"parity", parity_name(ht.parity)},
              {"simply_connected", ht.simply_connected}};
}

json to_json(const DissolveTarget& t) {
  return json{{"p", to_json(t.p)}, {"q", to_json(t.q)}};
}

json to_json(const CoverStage& s) {
  return json::array({to_json(s.degree), to_json(s.curve_param)});
}

json to_json(const CoverTower& t) {
  json stages = json::array();
  for (const auto& s : t.stages) stages.push_back(to_json(s));
  return json{{"stages", stages}};
}

CoverTower tower_from_json(const json& j) {
  CoverTower t;
  for (const auto& s : j.at("stages"))
    t.stages.push_back(CoverStage{int_from_json(s.at(0)), int_from_json(s.at(1))});
  return t;
}

json to_json(const PrimeWindow& w) {
  json primes = json::array();
  for (const auto& p : w.primes) primes.push_back(to_json(p));
  return json{{"primes", primes}, {"alpha", to_json(w.alpha)}};
}

json to_json(const Congruence& c) {
  return json{{"residue", to_json(c.residue)}, {"modulus", to_json(c.modulus)}};
}

json to_json(const FeasibilityWindow& w) {
  return json{{"b_min", to_json(w.b_min)},
              {"b_max", to_json(w.b_max)},
              {"kappa", to_json(w.kappa)},
              {"kappa_prime", to_json(w.kappa_prime)}};
}

json to_json(const KTupleSpec& spec) {
  json mu = json::array();
  for (const auto& m : spec.mu) mu.push_back(to_json(m));
  return json{{"k", to_json(spec.k)},
              {"mu", mu},
              {"delta", to_json(spec.delta)},
              {"alpha", to_json(spec.alpha)},
              {"m0_policy", spec.m0_policy == M0Policy::auto_minimal ? "auto" : "explicit"},
              {"m0_explicit", to_json(spec.m0_explicit)},
              {"parity_target", divisibility_parity_name(spec.parity_target)}};
}

KTupleSpec ktuple_spec_from_json(const json& j) {
  KTupleSpec spec;
  spec.k = int_from_json(j.at("k"));
  for (const auto& m : j.at("mu")) spec.mu.push_back(rat_from_json(m));
  spec.delta = rat_from_json(j.at("delta"));
  spec.alpha = rat_from_json(j.at("alpha"));
  spec.m0_policy =
      j.at("m0_policy").get<std::string>() == "auto" ? M0Policy::auto_minimal : M0Policy::explicit_value;
  spec.m0_explicit = int_from_json(j.at("m0_explicit"));
  spec.parity_target = j.at("parity_target").get<std::string>() == "odd" ? DivisibilityParity::odd
                                                                         : DivisibilityParity::even;
  return spec;
}

json to_json(const PerPrimeRecord& r) {
  json parts = json::array();
  for (const auto& x : r.parts) parts.push_back(to_json(x));
  return json{{"d", to_json(r.d)},
              {"A", to_json(r.a)},
              {"B", to_json(r.b)},
              {"window", to_json(r.window)},
              {"parts", parts}};
}

json to_json(const SynthesisState& s) {
  json per = json::array();
  for (const auto& r : s.per_prime) per.push_back(to_json(r));
  return json{{"window", to_json(s.window)},
              {"P", to_json(s.p_product)},
              {"epsilon", to_json(s.epsilon)},
              {"m0", to_json(s.m0)},
              {"C", to_json(s.c)},
              {"C_prime", to_json(s.c_prime)},
              {"C_modulus", to_json(s.c_modulus)},
              {"C_prime_modulus", to_json(s.c_prime_modulus)},
              {"delta_window_width", to_json(s.delta_width)},
              {"per_prime", per},
              {"search_limit_used", s.search_limit_used},
              {"attempts", s.attempts}};
}

json to_json(const KTupleResult& r) {
  json towers = json::array();
  for (const auto& t : r.towers) towers.push_back(to_json(t));
  json divs = json::array();
  for (const auto& d : r.divisibilities) divs.push_back(to_json(d));
  return json{{"towers", towers},
              {"shared", to_json(r.shared)},
              {"divisibilities", divs},
              {"achieved_sigma_ratio", to_json(r.achieved_sigma_ratio)},
              {"spec", to_json(r.spec)},
              {"state", to_json(r.state)}};
}

json to_json(const SlopeReport& r) {
  return json{{"slope", to_json(r.slope)},
              {"sigma_ratio", to_json(r.sigma_ratio)},
              {"mu_sq", to_json(r.mu_sq)},
              {"distance", to_json(r.distance)}};
}

json to_json(const CiInvariants& ci) {
  return json{{"invariants", to_json(ci.cn)}, {"negative_euler_flag", ci.negative_euler_flag}};
}

json to_json(const CanonicalVector& v) {
  json coeffs = json::array();
  for (const auto& c : v.coefficients) coeffs.push_back(to_json(c));
  return json{{"coefficients", coeffs},
              {"divisibility", to_json(v.divisibility)},
              {"spin", v.spin},
              {"ampleness_unverified", v.ampleness_unverified}};
}

json to_json(const CatalogEntry& e) {
  return json{{"name", e.name},
              {"invariants", to_json(e.cn)},
              {"ke_exists", e.ke_exists},
              {"simply_connected", e.simply_connected},
              {"parity", parity_name(e.parity)}};
}

namespace {

const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::elliptic:   return "E";
    case BlockKind::small_s:    return "S";
    case BlockKind::positive_y: return "Y";
    case BlockKind::positive_x: return "X";
    case BlockKind::k3_blownup: return "K3b";
  }
  return "?";
}

BlockKind block_kind_from_name(const std::string& s) {
  if (s == "E") return BlockKind::elliptic;
  if (s == "S") return BlockKind::small_s;
  if (s == "Y") return BlockKind::positive_y;
  if (s == "X") return BlockKind::positive_x;
  if (s == "K3b") return BlockKind::k3_blownup;
  raise(Errc::invalid_argument, "unknown block kind '" + s + "'");
}

}  // namespace

json to_json(const BuildingBlock& b) {
  json logs = json::array();
  for (const auto& m : b.log_transforms) logs.push_back(to_json(m));
  return json{{"kind", block_kind_name(b.kind)},
              {"param", to_json(b.param)},
              {"log_transforms", logs}};
}

json to_json(const BlockRun& r) {
  return json{{"block", to_json(r.block)}, {"count", to_json(r.count)}, {"genus", r.genus}};
}

json to_json(const SumRecipe& r) {
  json runs = json::array();
  for (const auto& run : r.runs) runs.push_back(to_json(run));
  return json{{"runs", runs}, {"blowups", to_json(r.blowups)}, {"label", r.label()}};
}

SumRecipe recipe_from_json(const json& j) {
  SumRecipe r;
  for (const auto& run : j.at("runs")) {
    BlockRun br;
    br.block.kind = block_kind_from_name(run.at("block").at("kind").get<std::string>());
    br.block.param = int_from_json(run.at("block").at("param"));
    for (const auto& m : run.at("block").at("log_transforms"))
      br.block.log_transforms.push_back(int_from_json(m));
    br.count = int_from_json(run.at("count"));
    br.genus = run.at("genus").get<int>();
    r.runs.push_back(std::move(br));
  }
  r.blowups = int_from_json(j.at("blowups"));
  return r;
}

json to_json(const DissolutionExpression& d) {
  json atoms = json::object();
  for (const auto& [key, count] : d.atoms) atoms[key] = to_json(count);
  json steps = json::array();
  for (const auto& s : d.steps)
    steps.push_back(json{{"action", s.action}, {"e", to_json(s.e)}, {"sigma", to_json(s.sigma)}});
  return json{{"atoms", atoms},
              {"pending", d.pending},
              {"e", to_json(d.e)},
              {"sigma", to_json(d.sigma)},
              {"steps", steps}};
}

json to_json(const Rule& r) {
  return json{{"name", r.name},
              {"relation", r.relation},
              {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"holds", r.holds}};
}

json to_json(const Verdict& v) {
  json rules = json::array();
  for (const auto& r : v.rule_chain) rules.push_back(to_json(r));
  return json{{"status", verdict_status_name(v.status)},
              {"rule_chain", rules},
              {"assumptions", v.assumptions}};
}

json to_json(const ZEntry& z) {
  return json{{"tower", to_json(z.tower)},
              {"divisibility", to_json(z.divisibility)},
              {"verdict", to_json(z.verdict)}};
}

json to_json(const XEntry& x) {
  json family = json::array();
  for (const auto& f : x.family) family.push_back(to_json(f));
  return json{{"minimal_recipe", to_json(x.minimal_recipe)},
              {"blowups", to_json(x.blowups)},
              {"minimal_invariants", to_json(x.minimal_cn)},
              {"family", family},
              {"verdict", to_json(x.verdict)}};
}

json to_json(const MainTheoremReport& r) {
  json zs = json::array();
  for (const auto& z : r.z_list) zs.push_back(to_json(z));
  json xs = json::array();
  for (const auto& x : r.x_list) xs.push_back(to_json(x));
  return json{{"k", to_json(r.k)},
              {"tuple", to_json(r.tuple)},
              {"z_list", zs},
              {"x_list", xs},
              {"shared_homeo", to_json(r.shared_homeo)},
              {"slope", to_json(r.slope)}};
}

json to_json(const PqVerdict& v) {
  json out{{"verdict", to_json(v.verdict)}};
  if (v.witness) {
    json w{{"route", v.witness->route},
           {"description", v.witness->description},
           {"blowups", to_json(v.witness->blowups)},
           {"k_bars", to_json(v.witness->k_bars)}};
    if (v.witness->recipe) w["recipe"] = to_json(*v.witness->recipe);
    out["witness"] = w;
  }
  return out;
}

}  // namespace geog
