#include "amha/grid/map_generator.hpp"

#include "amha/random.hpp"

namespace amha::grid {

OccupancyGrid random_obstacle_grid(int width, int height, double resolution, int rects, int max_side, std::uint64_t seed) {
  Rng rng(seed);
  OccupancyGrid grid = OccupancyGrid::empty(width, height, resolution);
  for (int i = 0; i < rects; ++i) {
    const int w = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(max_side)));
    const int h = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(max_side)));
    const int x = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(width)));
    const int y = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(height)));
    grid.fill_rect(x, y, x + w - 1, y + h - 1);
  }
  return grid;
}

std::optional<Scenario> random_scenario(const GridWorld& world, std::uint64_t seed, int attempts) {
  Rng rng(seed);
  const auto& grid = world.grid;
  const int headings = world.primitives.headings();
  auto pose_free = [&](int x, int y, int theta) {
    return !footprint_collides(grid, world.footprint, {static_cast<double>(x), static_cast<double>(y), heading_angle(theta, headings)});
  };
  auto draw = [&](std::uint64_t n) { return static_cast<int>(uniform_index(rng, n)); };
  for (int a = 0; a < attempts; ++a) {
    Scenario s;
    s.start = {draw(static_cast<std::uint64_t>(grid.width())), draw(static_cast<std::uint64_t>(grid.height())),
               draw(static_cast<std::uint64_t>(headings))};
    s.goal_x = draw(static_cast<std::uint64_t>(grid.width()));
    s.goal_y = draw(static_cast<std::uint64_t>(grid.height()));
    if (s.goal_x == s.start.x && s.goal_y == s.start.y) continue;
    if (!pose_free(s.start.x, s.start.y, s.start.theta)) continue;
    bool goal_ok = false;
    for (int t = 0; t < headings && !goal_ok; ++t) goal_ok = pose_free(s.goal_x, s.goal_y, t);
    if (goal_ok) return s;
  }
  return std::nullopt;
}

}  // namespace amha::grid
