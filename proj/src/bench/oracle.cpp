#include "amha/bench/oracle.hpp"

#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace amha::bench {

OracleResult oracle_optimal(SearchDomain& domain, std::size_t max_states) {
  OracleResult result;
  std::vector<Cost> dist;
  std::vector<bool> settled;
  auto ensure = [&](StateId s) {
    if (s >= dist.size()) {
      dist.resize(static_cast<std::size_t>(s) + 1 + dist.size() / 2, kInfiniteCost);
      settled.resize(dist.size(), false);
    }
  };
  using Item = std::pair<Cost, StateId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  const StateId start = domain.start_state();
  ensure(start);
  dist[start] = 0;
  open.push({0, start});
  std::vector<Edge> edges;
  while (!open.empty()) {
    const auto [d, s] = open.top();
    open.pop();
    if (settled[s]) continue;
    settled[s] = true;
    if (domain.is_goal(s)) {
      result.status = OracleResult::Status::kSolved;
      result.cost = d;
      return result;
    }
    if (++result.expanded > max_states) {
      result.status = OracleResult::Status::kUnavailable;
      return result;
    }
    edges.clear();
    domain.successors(s, edges);
    for (const auto& e : edges) {
      ensure(e.target);
      const Cost nd = d + e.cost;
      if (nd < dist[e.target]) {
        dist[e.target] = nd;
        open.push({nd, e.target});
      }
    }
  }
  result.status = OracleResult::Status::kUnreachable;
  return result;
}

}  // namespace amha::bench
