#pragma once

#include <set>
#include <vector>

#include "amha/search_domain.hpp"

namespace amha {

/// A small in-memory graph with tabulated heuristics: states 0..n-1,
/// directed weighted edges, a set of goal states, and an (N+1) x n table
/// of heuristic values.
class ExplicitGraph : public SearchDomain {
 public:
  ExplicitGraph(std::size_t num_states, StateId start, std::set<StateId> goals, int num_inadmissible);

  void add_edge(StateId from, StateId to, Cost cost);
  void add_undirected_edge(StateId a, StateId b, Cost cost);
  void set_heuristic(StateId s, int index, double value);
  /// Sets every heuristic index of every state to h(s).
  template <class F>
  void set_all_heuristics(F&& h) {
    for (StateId s = 0; s < num_states_; ++s)
      for (int i = 0; i <= num_inadmissible_; ++i) set_heuristic(s, i, h(s, i));
  }

  const std::vector<Edge>& edges(StateId s) const { return adjacency_[s]; }

  StateId start_state() override { return start_; }
  bool is_goal(StateId s) const override { return goals_.contains(s); }
  void successors(StateId s, std::vector<Edge>& out) override;
  int num_inadmissible() const override { return num_inadmissible_; }
  double heuristic(StateId s, int index) const override;
  std::size_t num_states() const override { return num_states_; }

 private:
  std::size_t num_states_;
  StateId start_;
  std::set<StateId> goals_;
  int num_inadmissible_;
  std::vector<std::vector<Edge>> adjacency_;
  std::vector<double> heuristics_;
};

/// 4-connected width x height grid with unit costs; id = y * width + x.
/// All heuristics start at zero.
ExplicitGraph make_grid_graph(int width, int height, StateId start, StateId goal, int num_inadmissible,
                              const std::vector<bool>& blocked = {});

}  // namespace amha
