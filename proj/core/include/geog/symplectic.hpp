#pragma once

#include "geog/invariants.hpp"
#include "geog/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace geog {

enum class BlockKind {
  elliptic,    // E(n), n >= 1, optional logarithmic-transform multiplicities
  small_s,     // the chi = 2, c1^2 = 1 block with disjoint T and genus-2 F
  positive_y,  // Y(i): simply connected positive-signature block
  positive_x,  // X(i): Lefschetz-fibration intermediate, not simply connected
  k3_blownup,  // K3 blown up j times
};

struct BuildingBlock {
  BlockKind kind = BlockKind::elliptic;
  Int param = 1;                    // n, i or j depending on kind
  std::vector<Int> log_transforms;  // multiplicities, elliptic blocks only

  CharNumbers invariants() const;
  bool minimal() const;
  bool simply_connected() const;
  bool spin() const;
  bool acd() const;
  /// Carries a square-zero torus whose complement is simply connected.
  bool torus_complement_sc() const;
  bool has_genus2_surface() const;
  std::string label() const;

  bool operator==(const BuildingBlock&) const = default;
};

BuildingBlock elliptic_block(const Int& n);
BuildingBlock small_block();
BuildingBlock y_block(const Int& i);
BuildingBlock x_block(const Int& i);
BuildingBlock k3_blownup_block(const Int& j);

/// `count` copies of one block chained along genus-`genus` surfaces; the
/// same genus joins the run to the blocks before it. Counts are exact
/// integers so recipes scale to astronomically large invariants.
struct BlockRun {
  BuildingBlock block;
  Int count = 1;
  int genus = 1;

  bool operator==(const BlockRun&) const = default;
};

/// Left-fold chain of block runs glued along the recorded surfaces, then
/// blown up. The first run's genus only governs its internal seams.
struct SumRecipe {
  std::vector<BlockRun> runs;
  Int blowups = 0;

  Int block_count() const;
  Int seam_count() const;
  std::string label() const;
  bool operator==(const SumRecipe&) const = default;
};

SumRecipe single_block_recipe(const BuildingBlock& b);

/// Structural checks: counts >= 1, seam genera in {1, 2}, every block
/// simply connected, every seam with a matching surface on both sides and
/// a simply connected complement on at least one.
void validate(const SumRecipe& recipe);

bool recipe_simply_connected(const SumRecipe& recipe);
bool recipe_spin(const SumRecipe& recipe);
bool recipe_minimal(const SumRecipe& recipe);
bool recipe_acd_pending(const SumRecipe& recipe);  // blocks with unknown resolving number

/// Genus-g fiber-sum arithmetic: e adds plus 4(g-1), sigma adds.
CharNumbers fold_genus_sum(const CharNumbers& a, const CharNumbers& b, int genus);

/// Blowups: e grows by b, sigma drops by b (chi fixed, c1^2 drops by b).
CharNumbers blow_up(const CharNumbers& cn, const Int& b);

/// Folds the recipe left to right, then applies the blowups.
CharNumbers sum_invariants(const SumRecipe& recipe);

struct PlannerConfig {
  int i_max = 16;    // largest Y(i) block considered
  int l_probe = 64;  // how many l values to probe per block choice
};

/// Constructive planner: realizes (chi, c1sq) as a minimal simply connected
/// recipe. c1sq = 0 yields E(chi); otherwise the unique decomposition
/// c1sq = 9k + r - 8 with 0 <= r <= 8, k > 0 and n = chi - 3k - 2r + 1 >= 2;
/// otherwise Y(i)-block translates are searched. The returned recipe is
/// round-trip verified through sum_invariants.
/// Errors: Unreachable naming the binding constraint.
SumRecipe plan_point(const Int& chi, const Int& c1sq, const PlannerConfig& cfg = {});

struct RegionConfig {
  Int wedge_c = 72;     // y <= 6x - c cutoff of the wedge tag
  Rat eps = Rat(1, 2);  // slope margin of the geo / non-Einstein tags
  Int geo_c = 0;        // 0 = derive from the chosen Y block
  Int ne_c = 0;         // 0 = same as geo_c
};

/// Evaluates the published region inequalities with configured constants.
/// Tags are advisory; planners check their constructive constraints
/// directly and never consult these.
std::vector<std::string> region_membership(const Int& chi, const Int& c1sq,
                                           const RegionConfig& cfg = {});

struct DissolutionStep {
  std::string action;
  Int e;
  Int sigma;
};

/// Connected-sum expression over standard pieces and opaque exotic blocks,
/// with symbolic conditions still owed for a complete decomposition.
struct DissolutionExpression {
  std::map<std::string, Int> atoms;  // "CP2", "CP2bar", "S2xS2", "S", "Y(i)", "K3b(j)"
  std::vector<std::string> pending;  // e.g. "count(S2xS2) >= k0(S)"
  std::vector<DissolutionStep> steps;
  Int e = 0;      // of the whole expression
  Int sigma = 0;

  Int count(const std::string& key) const;
};

/// Rewrites recipe # CP2 into a connected sum: one stabilization-consuming
/// split at an elliptic seam, pair-consuming splits at the remaining seams
/// (batched per run), elliptic breakup, and CP2 + CP2bar -> S2xS2 + CP2bar
/// conversion. Every step conserves (e, sigma) and is recorded in the trace.
/// Errors: SpinRecipe; NoEllipticSeam.
DissolutionExpression dissolve(const SumRecipe& recipe);

/// Log-transform family on the recipe's E(n >= 2) block: one member per
/// multiplicity, identical invariants, pairwise distinct tags. Smooth
/// distinctness is recorded as an assumption, not computed.
/// Errors: NoEllipticBlock.
std::vector<SumRecipe> infinite_family(const SumRecipe& recipe,
                                       const std::vector<Int>& multiplicities);

}  // namespace geog
