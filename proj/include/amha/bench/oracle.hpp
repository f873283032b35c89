#pragma once

#include <cstddef>

#include "amha/search_domain.hpp"

namespace amha::bench {

struct OracleResult {
  enum class Status { kSolved, kUnreachable, kUnavailable };
  Status status = Status::kUnavailable;
  Cost cost = kInfiniteCost;
  std::size_t expanded = 0;

  bool solved() const { return status == Status::kSolved; }
};

/// Optimal cost by uniform-cost search that ignores every heuristic.
/// kUnavailable once more than `max_states` states have been settled.
OracleResult oracle_optimal(SearchDomain& domain, std::size_t max_states = 5'000'000);

}  // namespace amha::bench
