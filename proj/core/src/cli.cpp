#include "geog/cli.hpp"

#include "geog/errors.hpp"
#include "geog/example_suite.hpp"
#include "geog/projective.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

namespace geog {

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::tower:    return "tower";
    case Subcommand::synth:    return "synth";
    case Subcommand::plan:     return "plan";
    case Subcommand::map:      return "map";
    case Subcommand::ci:       return "ci";
    case Subcommand::match:    return "match";
    case Subcommand::examples: return "examples";
  }
  return "?";
}

namespace {

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json config_to_json(const RunConfig& c) {
  json j{{"subcommand", subcommand_name(c.subcommand)}, {"seed", c.seed}};
  switch (c.subcommand) {
    case Subcommand::tower: {
      json stages = json::array();
      for (const auto& [d, m] : c.stages) stages.push_back(json::array({to_json(d), to_json(m)}));
      j["stages"] = stages;
      break;
    }
    case Subcommand::synth:
    case Subcommand::match:
      j["spec"] = to_json(c.spec);
      j["search_limit"] = c.synthesis.search_limit;
      j["max_doublings"] = c.synthesis.max_doublings;
      if (c.subcommand == Subcommand::match) {
        j["scan_width"] = c.match.scan_width;
        j["max_x_entries"] = c.match.max_x_entries;
        j["i_max"] = c.match.planner.i_max;
      }
      break;
    case Subcommand::plan:
      j["chi"] = to_json(c.chi);
      j["c1sq"] = to_json(c.c1sq);
      j["i_max"] = c.planner.i_max;
      break;
    case Subcommand::map:
      j["chi_max"] = to_json(c.chi_max);
      j["c1sq_max"] = to_json(c.c1sq_max);
      j["i_max"] = c.planner.i_max;
      break;
    case Subcommand::ci: {
      j["ambient"] = c.ambient;
      json degs = json::array();
      for (const auto& d : c.degrees) {
        json row = json::array();
        for (const auto& v : d) row.push_back(to_json(v));
        degs.push_back(row);
      }
      j["degrees"] = degs;
      break;
    }
    case Subcommand::examples:
      break;
  }
  return j;
}

json wrap_report(const RunConfig& config, json result) {
  return json{{"schema", "geographer/1"},
              {"generated_at", timestamp_utc()},
              {"seed", config.seed},
              {"config", config_to_json(config)},
              {"result", std::move(result)}};
}

json run_tower(const RunConfig& config) {
  CoverTower t;
  for (const auto& [d, m] : config.stages) t.stages.push_back(CoverStage{d, m});
  json out{{"tower", to_json(t)}, {"invariants", to_json(chern(t))}};
  out["hitchin_thorpe"] = hitchin_thorpe_name(hitchin_thorpe(chern(t)));
  try {
    const Divisibility div = canonical_divisibility(t);
    out["divisibility"] = to_json(div.value);
    out["spin"] = div.spin;
    const CharNumbers cn = chern(t);
    out["homeo_type"] = to_json(homeo_type(cn, div.spin ? Parity::spin : Parity::non_spin));
  } catch (const Error& err) {
    if (err.code() != Errc::not_general_type && err.code() != Errc::rokhlin_violation) throw;
    out["divisibility"] = nullptr;
  }
  out["verdict"] = to_json(einstein_flag(t));
  return out;
}

json run_synth(const RunConfig& config) {
  SynthesisOptions opts = config.synthesis;
  opts.seed = config.seed;
  KTupleResult result = synthesize(config.spec, opts);
  return json{{"tuple", to_json(result)}, {"slope_report", to_json(slope_report(result))}};
}

json run_plan(const RunConfig& config) {
  SumRecipe recipe = plan_point(config.chi, config.c1sq, config.planner);
  const CharNumbers cn = sum_invariants(recipe);
  return json{{"recipe", to_json(recipe)},
              {"invariants", to_json(cn)},
              {"tags", region_membership(config.chi, config.c1sq, config.region)},
              {"minimal", recipe_minimal(recipe)},
              {"simply_connected", recipe_simply_connected(recipe)},
              {"spin", recipe_spin(recipe)},
              {"acd_pending", recipe_acd_pending(recipe)}};
}

std::string run_map(const RunConfig& config) {
  std::ostringstream csv;
  csv << "# seed=" << config.seed << "\n";
  csv << "chi,c1sq,e,sigma,tags,recipe\n";
  for (Int chi = 1; chi <= config.chi_max; ++chi) {
    const Int cap = config.c1sq_max >= 0 ? config.c1sq_max
                                         : std::max<Int>(Int(0), 3 * chi - 51);
    for (Int c1 = 0; c1 <= cap; ++c1) {
      const CharNumbers cn = from_chi_c1sq(chi, c1);
      std::string recipe_label;
      try {
        recipe_label = plan_point(chi, c1, config.planner).label();
      } catch (const Error& err) {
        if (err.code() != Errc::unreachable) throw;
      }
      const auto tags = region_membership(chi, c1, config.region);
      std::string tag_str;
      for (size_t i = 0; i < tags.size(); ++i) tag_str += (i ? "|" : "") + tags[i];
      csv << chi << "," << c1 << "," << cn.e << "," << cn.sigma << "," << tag_str << ","
          << recipe_label << "\n";
    }
  }
  return csv.str();
}

json run_ci(const RunConfig& config) {
  MultidegreeCI x;
  x.ambient.dims = config.ambient;
  x.degrees = config.degrees;
  const CiInvariants ci = ci_invariants(x);
  const CanonicalVector k = canonical_vector(x);
  json out{{"invariants", to_json(ci.cn)},
           {"negative_euler_flag", ci.negative_euler_flag},
           {"canonical", to_json(k)},
           {"hitchin_thorpe", hitchin_thorpe_name(hitchin_thorpe(ci.cn))}};
  try {
    out["homeo_type"] =
        to_json(homeo_type(ci.cn, k.spin && !k.ampleness_unverified ? Parity::spin
                                                                    : Parity::non_spin));
  } catch (const Error&) {
    out["homeo_type"] = nullptr;
  }
  return out;
}

json run_match(const RunConfig& config) {
  MatchOptions opts = config.match;
  opts.synthesis = config.synthesis;
  opts.synthesis.seed = config.seed;
  const MainTheoremReport report = assemble_main_theorem(config.spec.k, config.spec, opts);
  return to_json(report);
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  try {
    switch (config.subcommand) {
      case Subcommand::tower:
        outcome.report = wrap_report(config, run_tower(config));
        break;
      case Subcommand::synth:
        outcome.report = wrap_report(config, run_synth(config));
        break;
      case Subcommand::plan:
        outcome.report = wrap_report(config, run_plan(config));
        break;
      case Subcommand::map:
        outcome.text = run_map(config);
        outcome.textual = true;
        break;
      case Subcommand::ci:
        outcome.report = wrap_report(config, run_ci(config));
        break;
      case Subcommand::match:
        outcome.report = wrap_report(config, run_match(config));
        break;
      case Subcommand::examples: {
        std::ostringstream lines;
        const bool ok = run_example_suite(lines);
        outcome.text = lines.str();
        outcome.textual = true;
        outcome.exit_code = ok ? 0 : 1;
        break;
      }
    }
  } catch (const Error& err) {
    outcome.report = json{{"schema", "geographer/1"},
                          {"seed", config.seed},
                          {"config", config_to_json(config)},
                          {"error", json{{"code", err.code_name()}, {"message", err.what()}}}};
    outcome.textual = false;
    outcome.exit_code = errc_is_malformed(err.code()) ? 3 : 2;
  } catch (const std::exception& err) {
    outcome.report = json{{"schema", "geographer/1"},
                          {"error", json{{"code", "InvalidArgument"}, {"message", err.what()}}}};
    outcome.exit_code = 3;
  }
  return outcome;
}

int run_and_write(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const RunOutcome outcome = run(config);
  const std::string payload = outcome.textual ? outcome.text : outcome.report.dump(2) + "\n";
  if (!config.out_path.empty()) {
    std::ofstream file(config.out_path);
    if (!file) {
      err << "cannot open " << config.out_path << " for writing\n";
      return 3;
    }
    file << payload;
    out << (outcome.exit_code == 0 ? "wrote " : "error report in ") << config.out_path << "\n";
  } else {
    out << payload;
  }
  return outcome.exit_code;
}

}  // namespace geog
