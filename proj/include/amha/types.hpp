#pragma once

#include <cstdint>
#include <limits>

namespace amha {

/// Dense identifier handed out by a domain's state-interning table.
using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// Path costs are integers (unit moves for tiles, milli-units for the lattice).
using Cost = std::int64_t;
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  StateId target;
  Cost cost;
};

inline double to_key(Cost c) {
  return c == kInfiniteCost ? kInfinity : static_cast<double>(c);
}

}  // namespace amha
