#pragma once

#include "geog/branched_covers.hpp"
#include "geog/einstein.hpp"
#include "geog/invariants.hpp"
#include "geog/number_theory.hpp"
#include "geog/projective.hpp"
#include "geog/symplectic.hpp"
#include "geog/synthesis.hpp"
#include "geog/verdict.hpp"

#include <nlohmann/json.hpp>

// JSON encoding conventions: big integers as decimal strings, rationals as
// "p/q" strings, towers as {"stages":[[d,m],...]}. Everything a report
// needs for exact replay round-trips through these.

namespace geog {

using json = nlohmann::ordered_json;

json to_json(const Int& v);
json to_json(const Rat& v);
Int int_from_json(const json& j);
Rat rat_from_json(const json& j);

json to_json(const CharNumbers& cn);
CharNumbers char_numbers_from_json(const json& j);

json to_json(const HomeoType& ht);
json to_json(const DissolveTarget& t);

json to_json(const CoverStage& s);
json to_json(const CoverTower& t);
CoverTower tower_from_json(const json& j);

json to_json(const PrimeWindow& w);
json to_json(const Congruence& c);

json to_json(const FeasibilityWindow& w);
json to_json(const KTupleSpec& spec);
KTupleSpec ktuple_spec_from_json(const json& j);
json to_json(const PerPrimeRecord& r);
json to_json(const SynthesisState& s);
json to_json(const KTupleResult& r);
json to_json(const SlopeReport& r);

json to_json(const CiInvariants& ci);
json to_json(const CanonicalVector& v);
json to_json(const CatalogEntry& e);

json to_json(const BuildingBlock& b);
json to_json(const BlockRun& r);
json to_json(const SumRecipe& r);
SumRecipe recipe_from_json(const json& j);
json to_json(const DissolutionExpression& d);

json to_json(const Rule& r);
json to_json(const Verdict& v);
json to_json(const ZEntry& z);
json to_json(const XEntry& x);
json to_json(const MainTheoremReport& r);
json to_json(const PqVerdict& v);

}  // namespace geog
