#pragma once

#include <vector>

#include "amha/grid/occupancy_grid.hpp"

namespace amha::grid {

/// Per-cell cost-to-goal over an 8-connected grid; +inf where unreachable.
struct HeuristicField {
  int width = 0;
  int height = 0;
  std::vector<double> values;
  bool goal_blocked = false;

  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }
  std::size_t unreachable_cells() const;
};

/// Distance in meters from each cell center to the nearest obstacle cell
/// center, cells beyond the border counting as obstacles. 0 on obstacles.
std::vector<double> clearance_map(const OccupancyGrid& grid);

/// Obstacles plus every cell with clearance <= block_radius (meters).
/// block_radius = 0 returns the grid unchanged.
OccupancyGrid blocked_grid(const OccupancyGrid& grid, double block_radius);

/// Backward 8-connected Dijkstra from the goal cell over blocked_grid(grid,
/// block_radius). Straight steps cost resolution * cost_scale, diagonals
/// sqrt(2) times that. A goal cell blocked after dilation yields an all-inf
/// field with goal_blocked set.
HeuristicField dijkstra_field(const OccupancyGrid& grid, int goal_x, int goal_y, double block_radius, double cost_scale = 1000.0);

}  // namespace amha::grid
