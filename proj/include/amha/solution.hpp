#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "amha/types.hpp"

namespace amha {

struct SolutionRecord {
  std::vector<StateId> path;  ///< start .. goal
  Cost cost = kInfiniteCost;  ///< g(goal) at publish time
  double bound = kInfinity;   ///< w1 * w2 at publish time
  double w1 = 1.0;
  double w2 = 1.0;
  double elapsed = 0.0;       ///< seconds since the run started
  std::uint64_t expansions_total = 0;
  std::uint64_t expansions_this_iteration = 0;
  int iteration = 0;
  /// Largest per-state expansion count seen in the publishing iteration.
  int max_state_expansions = 0;
};

enum class RunStatus {
  kCompleted,     ///< Final iteration published (w1 = w2 = 1, or the one-shot iteration).
  kNoSolution,    ///< Open list exhausted with the goal unreached.
  kTimedOut,      ///< Time budget ran out; published records stand.
  kStateLimit,    ///< State cap reached; published records stand.
};

struct ExpansionLogEntry {
  int iteration;
  StateId state;
  int queue;
};

struct RunResult {
  std::vector<SolutionRecord> records;
  RunStatus status = RunStatus::kNoSolution;
  std::uint64_t expansions_total = 0;
  double elapsed = 0.0;
  std::vector<ExpansionLogEntry> expansion_log;  ///< only with record_expansions
  bool solved() const { return !records.empty(); }
};

/// Emitted right before each expansion at the decision point.
struct ExpansionEvent {
  int iteration;
  StateId state;
  int queue;
  double queue_min;   ///< stored key of `state` in the queue it is expanded from
  double anchor_min;  ///< OPEN_0 min key at the decision point
  double w1;
  double w2;
};

using SolutionObserver = std::function<void(const SolutionRecord&)>;
using ExpansionHook = std::function<void(const ExpansionEvent&)>;

const char* to_string(RunStatus status);

}  // namespace amha
