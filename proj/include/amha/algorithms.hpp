#pragma once

#include "amha/planner.hpp"

namespace amha {

/// Runs whatever `config.mode` names.
RunResult run_planner(SearchDomain& domain, const PlannerConfig& config, const SolutionObserver& observer = {});

// The wrappers below override `config.mode`.

/// A-MHA*: publishes a w1*w2-bounded solution per iteration until w1 = w2 = 1.
RunResult run_anytime(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer = {});
/// One-shot MHA*: the first A-MHA* iteration only.
RunResult run_mha_oneshot(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer = {});
/// ARA*: anchor queue only, w1 schedule, published bound w1.
RunResult run_ara(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer = {});
RunResult run_weighted_astar(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer = {});
RunResult run_astar(SearchDomain& domain, PlannerConfig config, const SolutionObserver& observer = {});

}  // namespace amha
