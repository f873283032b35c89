#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "amha/indexed_heap.hpp"
#include "amha/planner_config.hpp"
#include "amha/search_domain.hpp"
#include "amha/solution.hpp"

namespace amha {

enum class ImproveOutcome {
  kGoalBoundProven,
  kExhausted,
  kTimedOut,
  kStateLimit,
};

/// Shared-g multi-queue search. With N inadmissible queues it is A-MHA*
/// (or one-shot MHA*); with the inadmissible queues disabled it reduces to
/// ARA* / weighted A* over the anchor queue alone.
///
/// `run()` drives the whole anytime loop. The step-level members
/// (`initialize`, `begin_iteration`, `improve_path`, `reconcile_queues`,
/// `expand`) are public so tests can drive the search by hand.
class MultiHeuristicPlanner {
 public:
  MultiHeuristicPlanner(SearchDomain& domain, PlannerConfig config);

  RunResult run(const SolutionObserver& observer = {});

  void initialize();
  void begin_iteration();
  ImproveOutcome improve_path();
  void reconcile_queues();
  void expand(StateId s, int queue);
  /// Decrements both weights by their deltas, clamped at 1.
  void step_weights();

  double key(StateId s, int queue) const;
  std::vector<StateId> extract_path(StateId goal) const;

  void set_weights(double w1, double w2);
  double w1() const { return w1_; }
  double w2() const { return w2_; }
  int num_inadmissible() const { return num_inadmissible_; }
  int iteration() const { return iteration_; }

  Cost g(StateId s) const { return s < nodes_.size() ? nodes_[s].g : kInfiniteCost; }
  StateId parent(StateId s) const { return s < nodes_.size() ? nodes_[s].parent : kNoState; }
  bool in_closed_anchor(StateId s) const { return s < nodes_.size() && nodes_[s].closed_anchor; }
  bool in_closed_inad(StateId s) const { return s < nodes_.size() && nodes_[s].closed_inad; }
  bool in_incons(StateId s) const { return s < nodes_.size() && nodes_[s].incons; }
  const IndexedHeap& open(int queue) const { return open_[queue]; }
  const std::vector<StateId>& incons() const { return incons_; }

  StateId goal_state() const { return goal_; }
  Cost goal_cost() const { return goal_ == kNoState ? kInfiniteCost : nodes_[goal_].g; }
  std::uint64_t expansions_total() const { return expansions_total_; }
  std::uint64_t expansions_this_iteration() const { return expansions_iteration_; }
  int max_state_expansions() const { return max_state_expansions_; }

  /// Open-list containment, closed exclusion, heap validity. nullopt when all hold.
  std::optional<std::string> check_invariants() const;

  void set_expansion_hook(ExpansionHook hook) { hook_ = std::move(hook); }

 private:
  struct Node {
    Cost g = kInfiniteCost;
    StateId parent = kNoState;
    int expanded_iteration = -1;
    std::uint8_t expansions = 0;
    bool closed_anchor = false;
    bool closed_inad = false;
    bool incons = false;
  };

  void ensure_node(StateId s);
  void relax(StateId from, const Edge& edge);
  std::optional<ImproveOutcome> check_goal_bound() const;
  std::optional<ImproveOutcome> check_budget();
  void expand_from(int queue);
  double elapsed_seconds() const;
  std::vector<StateId> repair_path();
  SolutionRecord make_record();

  SearchDomain& domain_;
  PlannerConfig config_;
  int num_inadmissible_;
  double w1_ = 1.0;
  double w2_ = 1.0;
  int iteration_ = 0;

  std::vector<Node> nodes_;
  std::vector<IndexedHeap> open_;
  std::vector<StateId> incons_;
  std::vector<Edge> scratch_;

  StateId start_ = kNoState;
  StateId goal_ = kNoState;

  std::uint64_t expansions_total_ = 0;
  std::uint64_t expansions_iteration_ = 0;
  int max_state_expansions_ = 0;

  std::chrono::steady_clock::time_point started_;
  ExpansionHook hook_;
  std::vector<ExpansionLogEntry> log_;
};

}  // namespace amha
