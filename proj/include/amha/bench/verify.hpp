#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amha/solution.hpp"

namespace amha::bench {

struct Violation {
  std::string tag;  ///< suboptimality | reexpansion | monotonicity | convergence
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
  bool has(const std::string& tag) const;
  std::string summary() const;
};

/// Checks a run's published records and expansion log:
///  - suboptimality: every cost <= bound * oracle_cost (skipped without an oracle)
///  - reexpansion: per iteration no state expanded more than twice, and a
///    second expansion only as inadmissible-then-anchor
///  - monotonicity: cost and bound non-increasing across records
///  - convergence: a final record at bound 1 has cost == oracle_cost
Verdict verify_run(std::span<const SolutionRecord> records, std::optional<Cost> oracle_cost,
                   std::span<const ExpansionLogEntry> expansion_log);

}  // namespace amha::bench
