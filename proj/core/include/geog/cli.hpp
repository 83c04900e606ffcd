#pragma once

#include "geog/einstein.hpp"
#include "geog/json_io.hpp"
#include "geog/symplectic.hpp"
#include "geog/synthesis.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace geog {

enum class Subcommand { tower, synth, plan, map, ci, match, examples };

const char* subcommand_name(Subcommand s);

/// Structured front-end configuration; the binary is a thin flag parser on
/// top of this. The seed is recorded in every output so a report can be
/// replayed from its own embedded config.
struct RunConfig {
  Subcommand subcommand = Subcommand::examples;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  std::string out_path;  // empty = stdout

  // tower
  std::vector<std::pair<Int, Int>> stages;

  // synth / match
  KTupleSpec spec;
  SynthesisOptions synthesis;
  MatchOptions match;

  // plan / map
  Int chi = 0;
  Int c1sq = 0;
  Int chi_max = 0;
  Int c1sq_max = -1;  // -1 = per-chi default cap 3*chi - 51
  PlannerConfig planner;
  RegionConfig region;

  // ci
  std::vector<int> ambient;
  std::vector<std::vector<Int>> degrees;
};

struct RunOutcome {
  int exit_code = 0;
  json report;       // JSON subcommands
  std::string text;  // csv / example-suite output
  bool textual = false;
};

/// Executes the subcommand; never throws (module errors become error
/// reports with exit code 2, malformed input 3).
RunOutcome run(const RunConfig& config);

/// Runs and writes the artifact to config.out_path or `out`.
int run_and_write(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace geog
