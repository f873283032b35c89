#include "amha/algorithms.hpp"

namespace amha {

RunResult run_planner(SearchDomain& domain, const PlannerConfig& config, const SolutionObserver& observer) {
  MultiHeuristicPlanner planner(domain, config);
  return planner.run(observer);
}

namespace {

RunResult run_as(Mode mode, SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer) {
  config.mode = mode;
  return run_planner(domain, config, observer);
}

}  // namespace

RunResult run_anytime(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer) {
  return run_as(Mode::kAnytimeMHA, domain, config, observer);
}

RunResult run_mha_oneshot(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer) {
  return run_as(Mode::kMHAOneShot, domain, config, observer);
}

RunResult run_ara(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer) {
  return run_as(Mode::kARA, domain, config, observer);
}

RunResult run_weighted_astar(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer) {
  return run_as(Mode::kWeightedA, domain, config, observer);
}

RunResult run_astar(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer) {
  return run_as(Mode::kAStar, domain, config, observer);
}

}  // namespace amha
