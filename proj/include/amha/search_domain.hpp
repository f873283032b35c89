#pragma once

#include <cstddef>
#include <vector>

#include "amha/types.hpp"

namespace amha {

/// A graph the planners can search. Implementations intern their states and
/// hand out dense ids; the planner only ever sees ids.
///
/// Heuristic 0 must be admissible and consistent; heuristics 1..N may be
/// arbitrary nonnegative estimates. Every heuristic is 0 on goal states.
class SearchDomain {
 public:
  virtual ~SearchDomain() = default;

  virtual StateId start_state() = 0;
  virtual bool is_goal(StateId s) const = 0;

  /// Appends (successor, cost) pairs to `out`. Costs are strictly positive.
  virtual void successors(StateId s, std::vector<Edge>& out) = 0;

  virtual int num_inadmissible() const = 0;
  virtual double heuristic(StateId s, int index) const = 0;

  /// Number of states interned so far (upper bound on ids handed out).
  virtual std::size_t num_states() const = 0;
};

}  // namespace amha
