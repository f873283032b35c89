#include "amha/explicit_graph.hpp"

#include <stdexcept>

namespace amha {

ExplicitGraph::ExplicitGraph(std::size_t num_states, StateId start, std::set<StateId> goals, int num_inadmissible)
    : num_states_(num_states),
      start_(start),
      goals_(std::move(goals)),
      num_inadmissible_(num_inadmissible),
      adjacency_(num_states),
      heuristics_(num_states * static_cast<std::size_t>(num_inadmissible + 1), 0.0) {
  if (start >= num_states) throw std::out_of_range("ExplicitGraph: start out of range");
  if (num_inadmissible < 0) throw std::invalid_argument("ExplicitGraph: negative heuristic count");
}

void ExplicitGraph::add_edge(StateId from, StateId to, Cost cost) {
  if (from >= num_states_ || to >= num_states_) throw std::out_of_range("ExplicitGraph: edge endpoint out of range");
  if (cost <= 0) throw std::invalid_argument("ExplicitGraph: edge costs must be positive");
  adjacency_[from].push_back({to, cost});
}

void ExplicitGraph::add_undirected_edge(StateId a, StateId b, Cost cost) {
  add_edge(a, b, cost);
  add_edge(b, a, cost);
}

void ExplicitGraph::set_heuristic(StateId s, int index, double value) {
  heuristics_.at(static_cast<std::size_t>(index) * num_states_ + s) = value;
}

double ExplicitGraph::heuristic(StateId s, int index) const {
  return heuristics_[static_cast<std::size_t>(index) * num_states_ + s];
}

void ExplicitGraph::successors(StateId s, std::vector<Edge>& out) {
  const auto& adj = adjacency_.at(s);
  out.insert(out.end(), adj.begin(), adj.end());
}

ExplicitGraph make_grid_graph(int width, int height, StateId start, StateId goal, int num_inadmissible,
                              const std::vector<bool>& blocked) {
  const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  ExplicitGraph graph(n, start, {goal}, num_inadmissible);
  auto free = [&](int x, int y) { return blocked.empty() || !blocked[static_cast<std::size_t>(y * width + x)]; };
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (!free(x, y)) continue;
      const auto id = static_cast<StateId>(y * width + x);
      if (x + 1 < width && free(x + 1, y)) graph.add_undirected_edge(id, id + 1, 1);
      if (y + 1 < height && free(x, y + 1)) graph.add_undirected_edge(id, id + static_cast<StateId>(width), 1);
    }
  }
  return graph;
}

}  // namespace amha
