#include "amha/planner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace amha {

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kCompleted: return "completed";
    case RunStatus::kNoSolution: return "no_solution";
    case RunStatus::kTimedOut: return "timed_out";
    case RunStatus::kStateLimit: return "state_limit";
  }
  return "?";
}

MultiHeuristicPlanner::MultiHeuristicPlanner(SearchDomain& domain, PlannerConfig config)
    : domain_(domain), config_(config), num_inadmissible_(0) {
  config_.validate();
  if (config_.uses_inadmissible()) {
    num_inadmissible_ = domain_.num_inadmissible();
    if (num_inadmissible_ < 1) throw std::invalid_argument("multi-heuristic modes need at least one inadmissible heuristic");
  }
  open_.resize(static_cast<std::size_t>(num_inadmissible_) + 1);
}

void MultiHeuristicPlanner::ensure_node(StateId s) {
  if (s >= nodes_.size()) {
    std::size_t n = std::max<std::size_t>(nodes_.size() * 2, 1024);
    while (n <= s) n *= 2;
    nodes_.resize(n);
  }
}

double MultiHeuristicPlanner::key(StateId s, int queue) const {
  const Cost gs = g(s);
  if (gs == kInfiniteCost) return kInfinity;
  return static_cast<double>(gs) + w1_ * domain_.heuristic(s, queue);
}

void MultiHeuristicPlanner::set_weights(double w1, double w2) {
  w1_ = w1;
  w2_ = w2;
}

void MultiHeuristicPlanner::step_weights() {
  w1_ = std::max(w1_ - config_.dw1, 1.0);
  w2_ = config_.uses_inadmissible() ? std::max(w2_ - config_.dw2, 1.0) : 1.0;
}

void MultiHeuristicPlanner::initialize() {
  w1_ = config_.mode == Mode::kAStar ? 1.0 : config_.w1_init;
  w2_ = config_.uses_inadmissible() ? config_.w2_init : 1.0;
  iteration_ = 0;
  nodes_.clear();
  for (auto& q : open_) q.clear();
  incons_.clear();
  log_.clear();
  goal_ = kNoState;
  expansions_total_ = 0;
  expansions_iteration_ = 0;
  max_state_expansions_ = 0;
  started_ = std::chrono::steady_clock::now();

  start_ = domain_.start_state();
  ensure_node(start_);
  nodes_[start_].g = 0;
  if (domain_.is_goal(start_)) goal_ = start_;
  for (int q = 0; q <= num_inadmissible_; ++q) open_[q].push_or_update(start_, key(start_, q), 0);
}

void MultiHeuristicPlanner::begin_iteration() {
  ++iteration_;
  for (auto& n : nodes_) {
    n.closed_anchor = false;
    n.closed_inad = false;
    n.incons = false;
  }
  incons_.clear();
  expansions_iteration_ = 0;
  max_state_expansions_ = 0;
}

void MultiHeuristicPlanner::relax(StateId from, const Edge& edge) {
  if (edge.cost <= 0) throw std::runtime_error("domain produced a non-positive edge cost");
  const StateId t = edge.target;
  ensure_node(t);
  const Cost candidate = nodes_[from].g + edge.cost;
  Node& n = nodes_[t];
  if (n.g <= candidate) return;
  n.g = candidate;
  n.parent = from;
  if (domain_.is_goal(t) && (goal_ == kNoState || candidate < nodes_[goal_].g)) goal_ = t;

  if (n.closed_anchor) {
    if (!n.incons) {
      n.incons = true;
      incons_.push_back(t);
    }
    return;
  }
  const double anchor_key = key(t, 0);
  open_[0].push_or_update(t, anchor_key, candidate);
  if (n.closed_inad) return;
  for (int j = 1; j <= num_inadmissible_; ++j) {
    const double kj = key(t, j);
    if (kj <= w2_ * anchor_key) open_[j].push_or_update(t, kj, candidate);
  }
}

void MultiHeuristicPlanner::expand(StateId s, int queue) {
  ensure_node(s);
  Node& n = nodes_[s];
  if (n.expanded_iteration != iteration_) {
    n.expanded_iteration = iteration_;
    n.expansions = 0;
  }
  ++n.expansions;
  max_state_expansions_ = std::max<int>(max_state_expansions_, n.expansions);
  ++expansions_total_;
  ++expansions_iteration_;
  if (config_.record_expansions) log_.push_back({iteration_, s, queue});

  for (auto& q : open_) q.remove(s);
  scratch_.clear();
  domain_.successors(s, scratch_);
  for (std::size_t k = 0; k < scratch_.size(); ++k) relax(s, scratch_[k]);
}

void MultiHeuristicPlanner::expand_from(int queue) {
  const HeapEntry top = open_[queue].top();
  if (hook_) hook_({iteration_, top.state, queue, top.key, open_[0].min_key(), w1_, w2_});
  expand(top.state, queue);
  if (queue == 0) {
    nodes_[top.state].closed_anchor = true;
  } else {
    nodes_[top.state].closed_inad = true;
  }
}

std::optional<ImproveOutcome> MultiHeuristicPlanner::check_goal_bound() const {
  const Cost goal_g = goal_cost();
  if (goal_g != kInfiniteCost && static_cast<double>(goal_g) <= w2_ * open_[0].min_key()) {
    return ImproveOutcome::kGoalBoundProven;
  }
  if (open_[0].empty()) return ImproveOutcome::kExhausted;
  return std::nullopt;
}

double MultiHeuristicPlanner::elapsed_seconds() const {
  if (config_.clock == ClockMode::kExpansions) {
    return static_cast<double>(expansions_total_) * config_.seconds_per_expansion;
  }
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
}

std::optional<ImproveOutcome> MultiHeuristicPlanner::check_budget() {
  if (config_.max_states > 0 && domain_.num_states() >= config_.max_states) return ImproveOutcome::kStateLimit;
  if (config_.time_budget > 0.0 && elapsed_seconds() >= config_.time_budget) return ImproveOutcome::kTimedOut;
  return std::nullopt;
}

ImproveOutcome MultiHeuristicPlanner::improve_path() {
  const bool per_expansion = config_.termination_check == TerminationCheck::kPerExpansion;
  const int round = std::max(num_inadmissible_, 1);
  for (;;) {
    if (auto done = check_goal_bound()) return *done;
    for (int i = 1; i <= round; ++i) {
      if (i > 1) {
        if (per_expansion) {
          if (auto done = check_goal_bound()) return *done;
        } else if (open_[0].empty()) {
          break;
        }
      }
      if (auto out = check_budget()) return *out;
      const double anchor_min = open_[0].min_key();
      if (num_inadmissible_ > 0 && open_[i].min_key() <= w2_ * anchor_min) {
        expand_from(i);
      } else {
        expand_from(0);
      }
    }
  }
}

void MultiHeuristicPlanner::reconcile_queues() {
  for (StateId s : incons_) {
    nodes_[s].incons = false;
    open_[0].push_or_update(s, key(s, 0), nodes_[s].g);
  }
  incons_.clear();
  open_[0].rekey_all([this](HeapEntry& e) {
    e.g = nodes_[e.state].g;
    e.key = key(e.state, 0);
  });
  for (int j = 1; j <= num_inadmissible_; ++j) {
    std::vector<HeapEntry> copy(open_[0].entries().begin(), open_[0].entries().end());
    for (auto& e : copy) e.key = key(e.state, j);
    open_[j].assign(std::move(copy));
  }
}

std::vector<StateId> MultiHeuristicPlanner::extract_path(StateId goal) const {
  if (g(goal) == kInfiniteCost) throw std::logic_error("extract_path: goal not reached");
  std::vector<StateId> path;
  for (StateId s = goal;; s = nodes_[s].parent) {
    if (s == kNoState) throw std::logic_error("extract_path: parent chain does not reach the start");
    path.push_back(s);
    if (s == start_) break;
    if (path.size() > nodes_.size()) throw std::logic_error("extract_path: cycle in parent chain");
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<StateId> MultiHeuristicPlanner::repair_path() {
  // Ancestors may have improved after the goal's g was set; relaxing along
  // the parent chain brings g(goal) down to the chain's exact edge sum.
  for (;;) {
    const StateId goal = goal_;
    std::vector<StateId> path = extract_path(goal);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      scratch_.clear();
      domain_.successors(path[k], scratch_);
      Cost best = kInfiniteCost;
      for (const auto& e : scratch_)
        if (e.target == path[k + 1]) best = std::min(best, e.cost);
      if (best == kInfiniteCost) throw std::logic_error("repair_path: parent chain uses a missing edge");
      relax(path[k], {path[k + 1], best});
    }
    if (goal_ == goal) return path;
  }
}

SolutionRecord MultiHeuristicPlanner::make_record() {
  SolutionRecord r;
  r.path = repair_path();
  r.cost = goal_cost();
  r.w1 = w1_;
  r.w2 = w2_;
  r.bound = w1_ * w2_;
  r.elapsed = elapsed_seconds();
  r.expansions_total = expansions_total_;
  r.expansions_this_iteration = expansions_iteration_;
  r.iteration = iteration_;
  r.max_state_expansions = max_state_expansions_;
  return r;
}

RunResult MultiHeuristicPlanner::run(const SolutionObserver& observer) {
  initialize();
  RunResult result;
  while (w1_ >= 1.0 && w2_ >= 1.0) {
    begin_iteration();
    const ImproveOutcome outcome = improve_path();
    if (outcome == ImproveOutcome::kTimedOut) {
      result.status = RunStatus::kTimedOut;
      break;
    }
    if (outcome == ImproveOutcome::kStateLimit) {
      result.status = RunStatus::kStateLimit;
      break;
    }
    if (outcome == ImproveOutcome::kExhausted) {
      result.status = RunStatus::kNoSolution;
      break;
    }
    result.records.push_back(make_record());
    if (observer) observer(result.records.back());
    if (!config_.is_anytime() || (w1_ == 1.0 && w2_ == 1.0)) {
      result.status = RunStatus::kCompleted;
      break;
    }
    step_weights();
    reconcile_queues();
  }
  result.expansions_total = expansions_total_;
  result.elapsed = elapsed_seconds();
  result.expansion_log = std::move(log_);
  log_.clear();
  return result;
}

std::optional<std::string> MultiHeuristicPlanner::check_invariants() const {
  std::ostringstream err;
  for (std::size_t q = 0; q < open_.size(); ++q) {
    if (!open_[q].is_valid()) err << "queue " << q << " heap order or index broken; ";
  }
  for (StateId s = 0; s < nodes_.size(); ++s) {
    const Node& n = nodes_[s];
    const bool in0 = open_[0].contains(s);
    for (int q = 1; q <= num_inadmissible_; ++q) {
      const bool inq = open_[q].contains(s);
      if (inq && !in0) err << "state " << s << " in OPEN_" << q << " but not OPEN_0; ";
      if (inq && n.closed_inad) err << "state " << s << " closed (inadmissible) but in OPEN_" << q << "; ";
      if (inq && n.closed_anchor) err << "state " << s << " closed (anchor) but in OPEN_" << q << "; ";
    }
    if (in0 && n.closed_anchor) err << "state " << s << " closed (anchor) but in OPEN_0; ";
    if (in0 && open_[0].entry(s).key != key(s, 0)) err << "state " << s << " has a stale anchor key; ";
    if (n.incons && !n.closed_anchor) err << "state " << s << " in INCONS without anchor closure; ";
  }
  if (start_ != kNoState && g(start_) != 0) err << "g(start) != 0; ";
  for (StateId s : incons_) {
    if (!nodes_[s].incons) err << "INCONS entry " << s << " lacks its flag; ";
  }
  const std::string out = err.str();
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace amha
