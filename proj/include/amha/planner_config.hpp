#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace amha {

enum class Mode {
  kAnytimeMHA,  ///< A-MHA*: anchor + N inadmissible queues, w1/w2 schedule.
  kMHAOneShot,  ///< MHA*: a single improve-path call at (w1, w2).
  kARA,         ///< ARA*: anchor queue only, w1 schedule.
  kWeightedA,   ///< WA*: a single anchor-only iteration at w1.
  kAStar,       ///< A*: WA* at w1 = 1.
};

enum class TerminationCheck {
  kPerRound,      ///< Test the goal bound once per round of N inner expansions.
  kPerExpansion,  ///< Test it before every expansion.
};

enum class ClockMode {
  kWall,        ///< Monotonic wall clock.
  kExpansions,  ///< Virtual time: expansions * seconds_per_expansion.
};

struct PlannerConfig {
  double w1_init = 1.0;
  double w2_init = 1.0;
  double dw1 = 1.0;
  double dw2 = 1.0;
  /// Seconds; <= 0 means unlimited.
  double time_budget = 0.0;
  Mode mode = Mode::kAnytimeMHA;
  TerminationCheck termination_check = TerminationCheck::kPerExpansion;
  ClockMode clock = ClockMode::kWall;
  double seconds_per_expansion = 1e-6;
  /// Stop (as if out of time) once the domain has interned this many states; 0 = no cap.
  std::size_t max_states = 0;
  /// Keep a per-expansion (iteration, state, queue) log in the run result.
  bool record_expansions = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  bool uses_inadmissible() const { return mode == Mode::kAnytimeMHA || mode == Mode::kMHAOneShot; }
  bool is_anytime() const { return mode == Mode::kAnytimeMHA || mode == Mode::kARA; }
};

std::string_view to_string(Mode mode);
/// Accepts amha, mha, ara, wa, astar. Throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view name);

std::string_view to_string(TerminationCheck check);
TerminationCheck parse_termination_check(std::string_view name);

}  // namespace amha
