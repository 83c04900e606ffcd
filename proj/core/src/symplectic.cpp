#include "geog/symplectic.hpp"

#include "geog/errors.hpp"

#include <algorithm>

namespace geog {

CharNumbers BuildingBlock::invariants() const {
  switch (kind) {
    case BlockKind::elliptic:
      return from_chi_c1sq(param, 0);
    case BlockKind::small_s:
      return from_chi_c1sq(2, 1);
    case BlockKind::positive_y:
      return from_chi_c1sq(25 * param * param + 31 * param + 4,
                           225 * param * param + 187 * param + 7);
    case BlockKind::positive_x:
      return from_chi_c1sq(25 * param * param + 30 * param + 1,
                           225 * param * param + 180 * param);
    case BlockKind::k3_blownup:
      return from_chi_c1sq(2, -param);
  }
  raise(Errc::invalid_argument, "unknown block kind");
}

bool BuildingBlock::minimal() const {
  switch (kind) {
    case BlockKind::elliptic:   return param > 1;
    case BlockKind::small_s:    return true;
    case BlockKind::positive_y: return true;
    case BlockKind::positive_x: return true;
    case BlockKind::k3_blownup: return param == 0;
  }
  return false;
}

bool BuildingBlock::simply_connected() const { return kind != BlockKind::positive_x; }

bool BuildingBlock::spin() const {
  // Bookkeeping flags; log transforms break the even intersection form.
  switch (kind) {
    case BlockKind::elliptic:   return param % 2 == 0 && log_transforms.empty();
    case BlockKind::small_s:    return false;
    case BlockKind::positive_y: return false;
    case BlockKind::positive_x: return false;
    case BlockKind::k3_blownup: return param == 0;
  }
  return false;
}

bool BuildingBlock::acd() const {
  switch (kind) {
    case BlockKind::elliptic:   return true;  // fiber sum of E(1)'s, with or without multiple fibers
    case BlockKind::k3_blownup: return true;
    case BlockKind::small_s:    return false;  // resolving number unknown
    case BlockKind::positive_y: return false;
    case BlockKind::positive_x: return false;
  }
  return false;
}

bool BuildingBlock::torus_complement_sc() const {
  switch (kind) {
    case BlockKind::elliptic:
      // A log-transformed fiber has divisible class; for n >= 2 the
      // transforms live in an E(n-1) piece and a clean nucleus remains.
      return log_transforms.empty() || param >= 2;
    case BlockKind::small_s:    return true;
    case BlockKind::positive_y: return true;  // K3 nucleus survives the construction
    case BlockKind::k3_blownup: return true;
    case BlockKind::positive_x: return false;
  }
  return false;
}

bool BuildingBlock::has_genus2_surface() const { return kind == BlockKind::small_s; }

std::string BuildingBlock::label() const {
  std::string base;
  switch (kind) {
    case BlockKind::elliptic:   base = "E(" + param.str() + ")"; break;
    case BlockKind::small_s:    base = "S"; break;
    case BlockKind::positive_y: base = "Y(" + param.str() + ")"; break;
    case BlockKind::positive_x: base = "X(" + param.str() + ")"; break;
    case BlockKind::k3_blownup: base = "K3b(" + param.str() + ")"; break;
  }
  if (!log_transforms.empty()) {
    base += "[log";
    for (const auto& m : log_transforms) base += " " + m.str();
    base += "]";
  }
  return base;
}

BuildingBlock elliptic_block(const Int& n) {
  if (n < 1) raise(Errc::invalid_argument, "E(n) needs n >= 1");
  return BuildingBlock{BlockKind::elliptic, n, {}};
}

BuildingBlock small_block() { return BuildingBlock{BlockKind::small_s, 0, {}}; }

BuildingBlock y_block(const Int& i) {
  if (i < 1) raise(Errc::invalid_argument, "Y(i) needs i >= 1");
  return BuildingBlock{BlockKind::positive_y, i, {}};
}

BuildingBlock x_block(const Int& i) {
  if (i < 1) raise(Errc::invalid_argument, "X(i) needs i >= 1");
  return BuildingBlock{BlockKind::positive_x, i, {}};
}

BuildingBlock k3_blownup_block(const Int& j) {
  if (j < 0) raise(Errc::invalid_argument, "K3 blown up j >= 0 times");
  return BuildingBlock{BlockKind::k3_blownup, j, {}};
}

Int SumRecipe::block_count() const {
  Int n = 0;
  for (const auto& r : runs) n += r.count;
  return n;
}

Int SumRecipe::seam_count() const { return block_count() - 1; }

std::string SumRecipe::label() const {
  std::string out;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (i > 0) out += " + ";
    if (runs[i].count != 1) out += runs[i].count.str() + "*";
    out += runs[i].block.label();
    if (runs[i].count > 1 || i > 0) out += runs[i].genus == 2 ? "@F" : "@T";
  }
  if (blowups > 0) out += " #" + blowups.str() + "bl";
  return out;
}

SumRecipe single_block_recipe(const BuildingBlock& b) {
  SumRecipe r;
  r.runs.push_back(BlockRun{b, 1, 1});
  return r;
}

void validate(const SumRecipe& recipe) {
  if (recipe.runs.empty()) raise(Errc::invalid_argument, "recipe needs at least one block");
  if (recipe.blowups < 0) raise(Errc::invalid_argument, "negative blowup count");
  bool prefix_genus2 = false;
  bool prefix_torus_sc = false;
  for (size_t j = 0; j < recipe.runs.size(); ++j) {
    const auto& run = recipe.runs[j];
    const auto& b = run.block;
    if (run.count < 1) raise(Errc::invalid_argument, "run counts must be >= 1");
    if (run.genus != 1 && run.genus != 2) raise(Errc::invalid_argument, "seam genus must be 1 or 2");
    if (!b.simply_connected())
      raise(Errc::invalid_argument, "block " + b.label() + " is not simply connected");
    for (const auto& m : b.log_transforms)
      if (m < 2) raise(Errc::invalid_argument, "log-transform multiplicities must be >= 2");
    if (b.kind != BlockKind::elliptic && !b.log_transforms.empty())
      raise(Errc::invalid_argument, "log transforms only apply to elliptic blocks");

    const Int connecting = j == 0 ? Int(0) : Int(1);
    const Int seams_here = run.count - 1 + connecting;
    if (seams_here > 0) {
      if (run.genus == 2) {
        if (!b.has_genus2_surface())
          raise(Errc::invalid_argument, "genus-2 seam at a block without a genus-2 surface");
        if (connecting == 1 && !prefix_genus2)
          raise(Errc::invalid_argument, "genus-2 seam with no genus-2 surface before it");
      } else {
        // Every catalog block carries a torus; the complement condition
        // needs one simply connected side per seam.
        const bool incoming_sc = b.torus_complement_sc();
        if (run.count > 1 && !incoming_sc)
          raise(Errc::invalid_argument,
                "internal torus seams of " + b.label() + " have no simply connected side");
        if (connecting == 1 && !incoming_sc && !prefix_torus_sc)
          raise(Errc::invalid_argument,
                "torus seam with simply connected complement on neither side");
      }
    }
    prefix_genus2 = prefix_genus2 || b.has_genus2_surface();
    prefix_torus_sc = prefix_torus_sc || b.torus_complement_sc();
  }
}

bool recipe_simply_connected(const SumRecipe& recipe) {
  validate(recipe);  // the seam conditions are exactly the Van Kampen bookkeeping
  return true;
}

bool recipe_spin(const SumRecipe& recipe) {
  if (recipe.blowups > 0) return false;
  for (const auto& r : recipe.runs)
    if (!r.block.spin()) return false;
  return true;
}

bool recipe_minimal(const SumRecipe& recipe) {
  if (recipe.blowups > 0) return false;
  if (recipe.block_count() == 1) return recipe.runs[0].block.minimal();
  // Sums of minimal blocks with chi > 1 stay minimal.
  for (const auto& r : recipe.runs)
    if (!r.block.minimal()) return false;
  return true;
}

bool recipe_acd_pending(const SumRecipe& recipe) {
  for (const auto& r : recipe.runs)
    if (!r.block.acd()) return true;
  return false;
}

CharNumbers fold_genus_sum(const CharNumbers& a, const CharNumbers& b, int genus) {
  if (genus < 1) raise(Errc::invalid_argument, "seam genus must be >= 1");
  return from_e_sigma(a.e + b.e + 4 * (genus - 1), a.sigma + b.sigma);
}

CharNumbers blow_up(const CharNumbers& cn, const Int& b) {
  if (b < 0) raise(Errc::invalid_argument, "negative blowup count");
  return from_e_sigma(cn.e + b, cn.sigma - b);
}

CharNumbers sum_invariants(const SumRecipe& recipe) {
  validate(recipe);
  // Fiber sums are additive in (e, sigma) up to 4(g-1) per seam, so the
  // whole fold collapses to one closed form per run.
  Int e = 0, sigma = 0;
  for (size_t j = 0; j < recipe.runs.size(); ++j) {
    const auto& run = recipe.runs[j];
    const CharNumbers b = run.block.invariants();
    const Int seams_here = run.count - 1 + (j == 0 ? 0 : 1);
    e += run.count * b.e + 4 * (run.genus - 1) * seams_here;
    sigma += run.count * b.sigma;
  }
  return blow_up(from_e_sigma(e, sigma), recipe.blowups);
}

namespace {

// X(k,r,n): k copies of S along the genus-2 surface, then r copies of S
// and one E(n) along tori.
SumRecipe wedge_recipe(const Int& k, const Int& r, const Int& n) {
  SumRecipe recipe;
  recipe.runs.push_back(BlockRun{small_block(), k, 2});
  if (r > 0) recipe.runs.push_back(BlockRun{small_block(), r, 1});
  recipe.runs.push_back(BlockRun{elliptic_block(n), 1, 1});
  return recipe;
}

struct WedgeDecomposition {
  Int k, r, n;
  bool feasible;
};

WedgeDecomposition decompose_wedge(const Int& chi, const Int& c1sq) {
  // Unique c1sq = 9k + r - 8 with 0 <= r <= 8, k > 0.
  WedgeDecomposition d;
  d.k = (c1sq + 8) / 9;
  d.r = (c1sq + 8) % 9;
  d.n = chi - 3 * d.k - 2 * d.r + 1;
  d.feasible = d.k > 0 && d.n >= 2;
  return d;
}

}  // namespace

SumRecipe plan_point(const Int& chi, const Int& c1sq, const PlannerConfig& cfg) {
  if (chi <= 0) raise(Errc::invalid_argument, "chi must be positive");
  if (c1sq < 0) raise(Errc::invalid_argument, "c1^2 must be non-negative");

  auto verified = [&](SumRecipe recipe) {
    CharNumbers cn = sum_invariants(recipe);
    if (cn.chi != chi || cn.c1sq != c1sq)
      raise(Errc::inconsistent_formulas, "planner recipe fails its round trip");
    return recipe;
  };

  if (c1sq == 0) {
    if (chi < 2)
      raise(Errc::unreachable, "c1^2 = 0 needs chi >= 2 for a minimal elliptic surface");
    return verified(single_block_recipe(elliptic_block(chi)));
  }

  auto d0 = decompose_wedge(chi, c1sq);
  if (d0.feasible) return verified(wedge_recipe(d0.k, d0.r, d0.n));

  // Y(i) translates: peel off l copies of Y(i) and plan the leftover.
  for (int i = 1; i <= cfg.i_max; ++i) {
    const CharNumbers y = y_block(i).invariants();
    const Int step = y.c1sq - 3 * y.chi;  // > 0 for every i
    Int l_min = c1sq - 3 * chi + 51 <= 0 ? Int(1) : ceil_div(c1sq - 3 * chi + 51, step);
    if (l_min < 1) l_min = 1;
    const Int l_max = c1sq / y.c1sq;
    Int probes = 0;
    for (Int l = l_min; l <= l_max && probes < cfg.l_probe; ++l, ++probes) {
      const Int chi_left = chi - l * y.chi;
      const Int c1_left = c1sq - l * y.c1sq;
      if (chi_left < 2) break;
      SumRecipe recipe;
      if (c1_left == 0) {
        recipe = single_block_recipe(elliptic_block(chi_left));
      } else {
        auto d = decompose_wedge(chi_left, c1_left);
        if (!d.feasible) continue;
        recipe = wedge_recipe(d.k, d.r, d.n);
      }
      recipe.runs.push_back(BlockRun{y_block(i), l, 1});
      return verified(recipe);
    }
  }
  raise(Errc::unreachable, "no wedge decomposition with n >= 2 and no Y(i) translate reaches (" +
                               chi.str() + ", " + c1sq.str() + ") with i <= " +
                               std::to_string(cfg.i_max));
}

std::vector<std::string> region_membership(const Int& chi, const Int& c1sq,
                                           const RegionConfig& cfg) {
  std::vector<std::string> tags;
  const Rat x(chi), y(c1sq);
  if (chi > 0 && c1sq >= 0 && y <= 3 * x - 51 && y <= 6 * x - Rat(cfg.wedge_c))
    tags.push_back("wedge");

  Int geo_c = cfg.geo_c;
  if (geo_c == 0) {
    // One full block of headroom above the wedge offset for the first
    // Y(i) whose slope clears 9 - eps.
    for (int i = 1; i <= 64; ++i) {
      const CharNumbers yb = y_block(i).invariants();
      if (Rat(yb.c1sq, yb.chi) > 9 - cfg.eps) {
        geo_c = ceil_rat((9 - cfg.eps) * Rat(yb.chi)) + 123;
        break;
      }
    }
  }
  const Int ne_c = cfg.ne_c == 0 ? geo_c : cfg.ne_c;
  if (chi > 0 && c1sq >= 0 && y <= (9 - cfg.eps) * x - Rat(geo_c)) tags.push_back("geo");
  if (chi > 0 && c1sq >= 0 && y <= (6 - cfg.eps) * x - Rat(ne_c)) tags.push_back("non-einstein");
  if (y > 9 * x) tags.push_back("bmy-violating");
  return tags;
}

Int DissolutionExpression::count(const std::string& key) const {
  auto it = atoms.find(key);
  return it == atoms.end() ? Int(0) : it->second;
}

namespace {

CharNumbers atom_invariants(const std::string& key) {
  if (key == "CP2") return from_e_sigma(3, 1);
  if (key == "CP2bar") return from_e_sigma(3, -1);
  if (key == "S2xS2") return from_e_sigma(4, 0);
  if (key == "S") return small_block().invariants();
  if (key.rfind("Y(", 0) == 0) return y_block(Int(key.substr(2, key.size() - 3))).invariants();
  if (key.rfind("E(", 0) == 0) return elliptic_block(Int(key.substr(2, key.size() - 3))).invariants();
  if (key.rfind("K3b(", 0) == 0)
    return k3_blownup_block(Int(key.substr(4, key.size() - 5))).invariants();
  raise(Errc::invalid_argument, "unknown atom '" + key + "'");
}

std::string atom_key(const BuildingBlock& b) {
  switch (b.kind) {
    case BlockKind::small_s:    return "S";
    case BlockKind::elliptic:   return "E(" + b.param.str() + ")";
    case BlockKind::positive_y: return "Y(" + b.param.str() + ")";
    case BlockKind::k3_blownup: return "K3b(" + b.param.str() + ")";
    case BlockKind::positive_x: break;
  }
  raise(Errc::invalid_argument, "block " + b.label() + " cannot enter a dissolution");
}

struct DissolveState {
  std::vector<BlockRun> runs;
  std::map<std::string, Int> atoms;

  std::pair<Int, Int> total() const {
    Int e = 0, sigma = 0, pieces = 0;
    for (size_t j = 0; j < runs.size(); ++j) {
      const auto& run = runs[j];
      const CharNumbers b = run.block.invariants();
      const Int seams_here = run.count - 1 + (j == 0 ? 0 : 1);
      e += run.count * b.e + 4 * (run.genus - 1) * seams_here;
      sigma += run.count * b.sigma;
    }
    if (!runs.empty()) pieces = 1;
    for (const auto& [key, count] : atoms) {
      if (count == 0) continue;
      CharNumbers cn = atom_invariants(key);
      e += count * cn.e;
      sigma += count * cn.sigma;
      pieces += count;
    }
    if (pieces > 1) e -= 2 * (pieces - 1);
    return {e, sigma};
  }

  void add(const std::string& key, const Int& count) {
    if (count == 0) return;
    atoms[key] += count;
    if (atoms[key] == 0) atoms.erase(key);
  }

  Int at(const std::string& key) const {
    auto it = atoms.find(key);
    return it == atoms.end() ? Int(0) : it->second;
  }
};

}  // namespace

DissolutionExpression dissolve(const SumRecipe& recipe) {
  validate(recipe);
  if (recipe_spin(recipe)) raise(Errc::spin_recipe, "dissolution needs a non-spin recipe");

  // Locate an elliptic run touching a torus seam (or standing alone).
  int elliptic_at = -1;
  const bool single_block = recipe.block_count() == 1;
  for (size_t j = 0; j < recipe.runs.size(); ++j) {
    const auto& run = recipe.runs[j];
    if (run.block.kind != BlockKind::elliptic) continue;
    const bool internal_torus = run.count > 1 && run.genus == 1;
    const bool connecting_torus = j > 0 && run.genus == 1;
    const bool next_torus = j + 1 < recipe.runs.size() && recipe.runs[j + 1].genus == 1;
    if (internal_torus || connecting_torus || next_torus || single_block) {
      elliptic_at = static_cast<int>(j);
      break;
    }
  }
  if (elliptic_at < 0)
    raise(Errc::no_elliptic_seam, "no elliptic block next to a torus seam to seed the split");

  DissolveState st;
  st.runs = recipe.runs;
  st.add("CP2", 1);  // the one stabilization
  st.add("CP2bar", recipe.blowups);

  DissolutionExpression out;
  auto [e0, s0] = st.total();
  out.e = e0;
  out.sigma = s0;
  auto record = [&](const std::string& action) {
    auto [e, sigma] = st.total();
    if (e != out.e || sigma != out.sigma)
      raise(Errc::inconsistent_formulas, "rewrite step '" + action + "' broke (e, sigma)");
    out.steps.push_back(DissolutionStep{action, e, sigma});
  };
  record("stabilize");

  // Step (a): the stabilization opens the elliptic piece. E(n >= 2) sheds
  // its E(1) end internally; an E(1) copy detaches through its own seam.
  // A lone E(1) is already rational and just expands.
  {
    BlockRun& er = st.runs[elliptic_at];
    if (single_block && er.block.param == 1) {
      st.runs.clear();
      st.add("CP2", 1);
      st.add("CP2bar", 9);
      record("expand-rational-elliptic");
    } else if (er.block.param >= 2) {
      st.add("CP2", -1);
      if (er.count == 1) {
        er.block.param -= 1;
        er.block.log_transforms.clear();  // transforms live in the detached part
      } else {
        BlockRun shed{elliptic_block(er.block.param - 1), 1, er.genus};
        er.count -= 1;
        st.runs.insert(st.runs.begin() + elliptic_at + 1, shed);
      }
      st.add("CP2", 3);
      st.add("CP2bar", 10);
      record("split-elliptic-seam");
    } else {
      // E(1) with count >= 1 inside a longer chain: detach one copy.
      st.add("CP2", -1);
      er.count -= 1;
      if (er.count == 0) st.runs.erase(st.runs.begin() + elliptic_at);
      st.add("CP2", 3);
      st.add("CP2bar", 10);
      record("split-elliptic-seam");
    }
  }

  // Step (b): remaining seams, batched per run from the right; each seam
  // consumes one CP2 + CP2bar pair and emits 2g pairs.
  while (!st.runs.empty()) {
    const BlockRun run = st.runs.back();
    st.runs.pop_back();
    const Int seams = st.runs.empty() ? run.count - 1 : run.count;
    st.add("CP2", (2 * run.genus - 1) * seams);
    st.add("CP2bar", (2 * run.genus - 1) * seams);
    st.add(atom_key(run.block), run.count);
    record(seams > 0 ? "split-seams-genus-" + std::to_string(run.genus) + "-x" + seams.str()
                     : "atomize-final-block");
  }

  // Step (c): elliptic atoms decompose against the available pairs,
  // E(m) contributing 2m-1 copies of CP2 and 10m-1 of CP2bar.
  {
    std::vector<std::pair<std::string, Int>> elliptics;
    for (const auto& [key, count] : st.atoms)
      if (key.rfind("E(", 0) == 0) elliptics.emplace_back(key, count);
    for (const auto& [key, count] : elliptics) {
      const Int m = Int(key.substr(2, key.size() - 3));
      if (m >= 2 && (st.at("CP2") < 1 || st.at("CP2bar") < 1))
        raise(Errc::inconsistent_formulas, "elliptic breakup without an available pair");
      st.add(key, -count);
      st.add("CP2", count * (2 * m - 1));
      st.add("CP2bar", count * (10 * m - 1));
      record("break-up-" + key);
    }
  }

  // Step (d): express S2xS2 counts; valid while surplus CP2bar copies or
  // an odd exotic piece keep the sum non-spin.
  {
    const Int cp2 = st.at("CP2");
    const Int bars = st.at("CP2bar");
    const Int pairs = std::min(cp2, bars);
    if (pairs > 0 && (bars > cp2 || st.atoms.count("S"))) {
      st.add("CP2", -pairs);
      st.add("CP2bar", -pairs);
      st.add("S2xS2", pairs);
      record("pair-to-s2xs2");
    }
  }

  out.atoms = st.atoms;
  for (const auto& [key, count] : out.atoms) {
    if (count < 1) continue;
    if (key == "S") out.pending.push_back("count(S2xS2) >= k0(S)");
    if (key.rfind("Y(", 0) == 0) out.pending.push_back("count(S2xS2) >= k0(" + key + ")");
    if (key.rfind("K3b(", 0) == 0) out.pending.push_back("count(S2xS2) >= k0(" + key + ")");
  }
  return out;
}

std::vector<SumRecipe> infinite_family(const SumRecipe& recipe,
                                       const std::vector<Int>& multiplicities) {
  validate(recipe);
  int at = -1;
  for (size_t j = 0; j < recipe.runs.size(); ++j)
    if (recipe.runs[j].block.kind == BlockKind::elliptic && recipe.runs[j].block.param >= 2) {
      at = static_cast<int>(j);
      break;
    }
  if (at < 0)
    raise(Errc::no_elliptic_block, "log-transform family needs an E(n) block with n >= 2");

  const CharNumbers base = sum_invariants(recipe);
  std::vector<SumRecipe> family;
  for (const auto& m : multiplicities) {
    if (m < 2) raise(Errc::invalid_argument, "multiplicities must be >= 2");
    SumRecipe member = recipe;
    auto& run = member.runs[at];
    if (run.count == 1) {
      run.block.log_transforms = {m};
    } else {
      BlockRun transformed{run.block, 1, run.genus};
      transformed.block.log_transforms = {m};
      run.count -= 1;
      member.runs.insert(member.runs.begin() + at + 1, transformed);
    }
    validate(member);
    if (!(sum_invariants(member) == base))
      raise(Errc::inconsistent_formulas, "log transform changed the invariants");
    family.push_back(std::move(member));
  }
  for (size_t i = 0; i + 1 < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (family[i] == family[j])
        raise(Errc::invalid_argument, "family multiplicities must be pairwise distinct");
  return family;
}

}  // namespace geog
