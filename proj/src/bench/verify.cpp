#include "amha/bench/verify.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace amha::bench {

bool Verdict::has(const std::string& tag) const {
  for (const auto& v : violations) {
    if (v.tag == tag) return true;
  }
  return false;
}

std::string Verdict::summary() const {
  if (pass()) return "pass";
  std::ostringstream os;
  os << "fail";
  for (const auto& v : violations) os << " [" << v.tag << ": " << v.detail << "]";
  return os.str();
}

Verdict verify_run(std::span<const SolutionRecord> records, std::optional<Cost> oracle_cost,
                   std::span<const ExpansionLogEntry> expansion_log) {
  Verdict verdict;
  auto add = [&](const char* tag, const std::string& detail) { verdict.violations.push_back({tag, detail}); };

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (oracle_cost && static_cast<double>(r.cost) > r.bound * static_cast<double>(*oracle_cost)) {
      std::ostringstream os;
      os << "record " << i << " cost " << r.cost << " > bound " << r.bound << " x optimal " << *oracle_cost;
      add("suboptimality", os.str());
    }
    if (i > 0) {
      const auto& prev = records[i - 1];
      if (r.cost > prev.cost || r.bound > prev.bound) {
        std::ostringstream os;
        os << "record " << i << " (cost " << r.cost << ", bound " << r.bound << ") after (cost " << prev.cost << ", bound "
           << prev.bound << ")";
        add("monotonicity", os.str());
      }
    }
  }
  if (oracle_cost && !records.empty() && records.back().bound == 1.0 && records.back().cost != *oracle_cost) {
    add("convergence", "final bound-1 cost " + std::to_string(records.back().cost) + " != optimal " + std::to_string(*oracle_cost));
  }

  // (iteration, state) -> queues it was expanded from, in order.
  std::map<std::pair<int, StateId>, std::vector<int>> seen;
  for (const auto& e : expansion_log) {
    auto& queues = seen[{e.iteration, e.state}];
    queues.push_back(e.queue);
    const std::size_t n = queues.size();
    if (n == 3) {
      add("reexpansion", "state " + std::to_string(e.state) + " expanded 3 times in iteration " + std::to_string(e.iteration));
    } else if (n == 2 && !(queues[0] >= 1 && queues[1] == 0)) {
      add("reexpansion", "state " + std::to_string(e.state) + " re-expanded out of order (queues " + std::to_string(queues[0]) + ", " +
                          std::to_string(queues[1]) + ") in iteration " + std::to_string(e.iteration));
    }
  }
  return verdict;
}

}  // namespace amha::bench
