#pragma once

#include <cstdint>
#include <optional>

#include "amha/grid/lattice_domain.hpp"

namespace amha::grid {

/// `rects` random axis-aligned obstacle blocks with sides in [1, max_side].
OccupancyGrid random_obstacle_grid(int width, int height, double resolution, int rects, int max_side, std::uint64_t seed);

/// Random collision-free start pose and a goal cell that is collision-free
/// at some heading and differs from the start cell. nullopt after
/// `attempts` failed draws.
std::optional<Scenario> random_scenario(const GridWorld& world, std::uint64_t seed, int attempts = 500);

}  // namespace amha::grid
