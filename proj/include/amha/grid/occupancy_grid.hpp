#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace amha::grid {

/// Row-major occupancy grid; y indexes rows. Anything outside the bounds
/// reads as occupied.
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution, std::vector<std::uint8_t> cells);
  static OccupancyGrid empty(int width, int height, double resolution);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }

  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  bool occupied(int x, int y) const {
    return !in_bounds(x, y) || cells_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)] != 0;
  }
  void set_occupied(int x, int y, bool value);
  /// Marks the inclusive rectangle [x0, x1] x [y0, y1], clipped to the grid.
  void fill_rect(int x0, int y0, int x1, int y1, bool value = true);

  const std::vector<std::uint8_t>& cells() const { return cells_; }

 private:
  int width_;
  int height_;
  double resolution_;
  std::vector<std::uint8_t> cells_;
};

/// Text map: "width height resolution_m", then `height` rows of `width`
/// characters, '.' free and '#' obstacle. The first row is y = 0.
OccupancyGrid read_map(std::istream& in);
OccupancyGrid read_map_file(const std::string& path);
void write_map(std::ostream& out, const OccupancyGrid& grid);

}  // namespace amha::grid
