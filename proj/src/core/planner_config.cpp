#include "amha/planner_config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace amha {

void PlannerConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("PlannerConfig: " + what); };
  if (!(std::isfinite(w1_init) && w1_init >= 1.0)) fail("w1_init must be >= 1");
  if (!(std::isfinite(w2_init) && w2_init >= 1.0)) fail("w2_init must be >= 1");
  if (!(dw1 > 0.0)) fail("dw1 must be > 0");
  if (!(dw2 > 0.0)) fail("dw2 must be > 0");
  if (std::isnan(time_budget)) fail("time_budget is NaN");
  if (clock == ClockMode::kExpansions && !(seconds_per_expansion > 0.0)) fail("seconds_per_expansion must be > 0");
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kAnytimeMHA: return "amha";
    case Mode::kMHAOneShot: return "mha";
    case Mode::kARA: return "ara";
    case Mode::kWeightedA: return "wa";
    case Mode::kAStar: return "astar";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "amha") return Mode::kAnytimeMHA;
  if (name == "mha") return Mode::kMHAOneShot;
  if (name == "ara") return Mode::kARA;
  if (name == "wa") return Mode::kWeightedA;
  if (name == "astar") return Mode::kAStar;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(TerminationCheck check) {
  return check == TerminationCheck::kPerRound ? "per_round" : "per_expansion";
}

TerminationCheck parse_termination_check(std::string_view name) {
  if (name == "per_round") return TerminationCheck::kPerRound;
  if (name == "per_expansion") return TerminationCheck::kPerExpansion;
  throw std::invalid_argument("unknown termination check '" + std::string(name) + "'");
}

}  // namespace amha
