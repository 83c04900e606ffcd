#pragma once

#include "geog/numeric.hpp"

#include <string>
#include <vector>

namespace geog {

enum class VerdictStatus { ke_exists, obstructed, unknown };

constexpr const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ke_exists:  return "KE-exists";
    case VerdictStatus::obstructed: return "obstructed";
    case VerdictStatus::unknown:    return "unknown";
  }
  return "?";
}

/// One named step of a verdict justification. Numeric rules store the two
/// sides of "3*lhs >= rhs"-style inequalities so the check can be replayed;
/// bookkeeping rules store holds=true and the flag they consume.
struct Rule {
  std::string name;
  std::string relation;  // e.g. "3*b >= c1sq", "flag"
  Int lhs = 0;
  Int rhs = 0;
  bool holds = false;

  bool replay() const;
  bool operator==(const Rule&) const = default;
};

/// Einstein-metric status of a descriptor plus the rule chain justifying it.
/// An "obstructed" verdict always carries at least one re-checkable numeric
/// inequality; "KE-exists" carries the assumptions it consumed. An "unknown"
/// verdict may record the failing rule with holds = false.
struct Verdict {
  VerdictStatus status = VerdictStatus::unknown;
  std::vector<Rule> rule_chain;
  std::vector<std::string> assumptions;

  /// Re-evaluates every recorded rule against its stored outcome, and for
  /// decided verdicts additionally requires every rule to hold.
  bool replay() const;
};

inline bool Rule::replay() const {
  if (relation == "flag") return holds;
  if (relation == "3*lhs >= rhs") return 3 * lhs >= rhs;
  if (relation == "3*lhs > rhs") return 3 * lhs > rhs;
  if (relation == "lhs >= rhs") return lhs >= rhs;
  if (relation == "lhs > rhs") return lhs > rhs;
  if (relation == "lhs == rhs") return lhs == rhs;
  if (relation == "lhs != rhs") return lhs != rhs;
  return false;
}

inline bool Verdict::replay() const {
  for (const auto& r : rule_chain) {
    if (r.replay() != r.holds) return false;
    if (status != VerdictStatus::unknown && !r.holds) return false;
  }
  return true;
}

}  // namespace geog
