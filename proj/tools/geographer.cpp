// Command-line front end: exact-arithmetic geography of branched covers,
// symplectic sums and Einstein-metric verdicts.

#include "geog/cli.hpp"
#include "geog/errors.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

geog::Int parse_int(const std::string& s) { return geog::Int(s); }

std::vector<std::pair<geog::Int, geog::Int>> parse_stages(const std::string& s) {
  // "2:3,2:3" -> [(2,3), (2,3)]
  std::vector<std::pair<geog::Int, geog::Int>> stages;
  std::string token;
  std::istringstream stream(s);
  while (std::getline(stream, token, ',')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--stages", "expected d:m pairs like 2:3,2:5");
    stages.emplace_back(parse_int(token.substr(0, colon)), parse_int(token.substr(colon + 1)));
  }
  if (stages.empty()) throw CLI::ValidationError("--stages", "no stages given");
  return stages;
}

std::vector<geog::Rat> parse_mu(const std::string& s) {
  std::vector<geog::Rat> mu;
  std::string token;
  std::istringstream stream(s);
  while (std::getline(stream, token, ',')) mu.push_back(geog::parse_rational(token));
  return mu;
}

std::vector<geog::Int> parse_int_list(const std::string& s) {
  std::vector<geog::Int> out;
  std::string token;
  std::istringstream stream(s);
  while (std::getline(stream, token, ',')) out.push_back(parse_int(token));
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GEOGRAPHER_SEED")) return std::strtoull(env, nullptr, 10);
  return 0x9e3779b97f4a7c15ULL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-integer geography toolkit for 4-manifold invariants"};
  app.require_subcommand(1);

  geog::RunConfig config;
  config.seed = default_seed();

  std::string stages_arg, mu_arg = "1/3,1/3,1/3", delta_arg = "1/25", alpha_arg = "0";
  std::string parity_arg = "odd", m0_arg = "auto";
  std::string chi_arg = "0", c1sq_arg = "0", chi_max_arg = "100", c1sq_max_arg = "-1";
  std::string ambient_arg, k_arg = "2";
  std::vector<std::string> degrees_args;

  auto* tower = app.add_subcommand("tower", "invariants of an iterated branched cover");
  tower->add_option("--stages", stages_arg, "stages as d:m pairs, e.g. 2:3,2:5")->required();

  auto* synth = app.add_subcommand("synth", "synthesize a k-tuple of covers");
  auto* match = app.add_subcommand("match", "assemble a main-theorem instance");
  for (auto* cmd : {synth, match}) {
    cmd->add_option("--k", k_arg, "tuple size (>= 2)");
    cmd->add_option("--mu", mu_arg, "signature profile, rationals summing to 1");
    cmd->add_option("--delta", delta_arg, "slope offset delta > 0");
    cmd->add_option("--alpha", alpha_arg, "prime window tightness (> 1), 0 = auto");
    cmd->add_option("--parity", parity_arg, "divisibility parity: odd | even");
    cmd->add_option("--m0", m0_arg, "base degree m0: auto or an explicit integer");
    cmd->add_option("--search-limit", config.synthesis.search_limit, "prime sieve limit, 0 = auto");
    cmd->add_option("--max-doublings", config.synthesis.max_doublings, "m0 growth budget");
  }
  match->add_option("--scan-width", config.match.scan_width, "c1^2 candidates for the blown-up side");
  match->add_option("--x-count", config.match.max_x_entries, "how many obstructed recipes to emit");
  match->add_option("--i-max", config.match.planner.i_max, "largest Y(i) block");

  auto* plan = app.add_subcommand("plan", "realize one (chi, c1^2) lattice point");
  plan->add_option("--chi", chi_arg)->required();
  plan->add_option("--c1sq", c1sq_arg)->required();
  plan->add_option("--i-max", config.planner.i_max, "largest Y(i) block");

  auto* map = app.add_subcommand("map", "CSV of lattice points, tags and recipes");
  map->add_option("--chi-max", chi_max_arg);
  map->add_option("--c1sq-max", c1sq_max_arg, "cap per row; -1 = 3*chi-51");
  map->add_option("--i-max", config.planner.i_max, "largest Y(i) block");

  auto* ci = app.add_subcommand("ci", "complete-intersection invariants");
  ci->add_option("--ambient", ambient_arg, "projective factors, e.g. 1,2")->required();
  ci->add_option("--degrees", degrees_args, "one multidegree per hypersurface, e.g. 5,6")
      ->required()
      ->take_all();

  app.add_subcommand("examples", "replay the cataloged family values");

  app.add_option("--seed", config.seed, "RNG seed (env GEOGRAPHER_SEED)")->capture_default_str();
  app.add_option("--out", config.out_path, "write the artifact to this path");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (tower->parsed()) {
      config.subcommand = geog::Subcommand::tower;
      config.stages = parse_stages(stages_arg);
    } else if (synth->parsed() || match->parsed()) {
      config.subcommand = synth->parsed() ? geog::Subcommand::synth : geog::Subcommand::match;
      config.spec.k = parse_int(k_arg);
      config.spec.mu = parse_mu(mu_arg);
      config.spec.delta = geog::parse_rational(delta_arg);
      config.spec.alpha = geog::parse_rational(alpha_arg);
      if (parity_arg != "odd" && parity_arg != "even")
        throw CLI::ValidationError("--parity", "expected odd or even");
      config.spec.parity_target = parity_arg == "odd" ? geog::DivisibilityParity::odd
                                                      : geog::DivisibilityParity::even;
      if (m0_arg == "auto") {
        config.spec.m0_policy = geog::M0Policy::auto_minimal;
      } else {
        config.spec.m0_policy = geog::M0Policy::explicit_value;
        config.spec.m0_explicit = parse_int(m0_arg);
      }
    } else if (plan->parsed()) {
      config.subcommand = geog::Subcommand::plan;
      config.chi = parse_int(chi_arg);
      config.c1sq = parse_int(c1sq_arg);
    } else if (map->parsed()) {
      config.subcommand = geog::Subcommand::map;
      config.chi_max = parse_int(chi_max_arg);
      config.c1sq_max = parse_int(c1sq_max_arg);
    } else if (ci->parsed()) {
      config.subcommand = geog::Subcommand::ci;
      for (const auto& v : parse_int_list(ambient_arg))
        config.ambient.push_back(v.convert_to<int>());
      for (const auto& d : degrees_args) config.degrees.push_back(parse_int_list(d));
    } else {
      config.subcommand = geog::Subcommand::examples;
    }
  } catch (const std::exception& err) {
    std::cerr << "malformed input: " << err.what() << "\n";
    return 3;
  }

  return geog::run_and_write(config, std::cout, std::cerr);
}
