#include "amha/grid/occupancy_grid.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace amha::grid {

OccupancyGrid::OccupancyGrid(int width, int height, double resolution, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), resolution_(resolution), cells_(std::move(cells)) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("OccupancyGrid: dimensions must be positive");
  if (!(resolution > 0.0)) throw std::invalid_argument("OccupancyGrid: resolution must be positive");
  if (cells_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("OccupancyGrid: cell count mismatch");
  }
}

OccupancyGrid OccupancyGrid::empty(int width, int height, double resolution) {
  return OccupancyGrid(width, height, resolution,
                       std::vector<std::uint8_t>(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0));
}

void OccupancyGrid::set_occupied(int x, int y, bool value) {
  if (!in_bounds(x, y)) throw std::out_of_range("OccupancyGrid: cell out of bounds");
  cells_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x)] = value ? 1 : 0;
}

void OccupancyGrid::fill_rect(int x0, int y0, int x1, int y1, bool value) {
  for (int y = std::max(0, y0); y <= std::min(height_ - 1, y1); ++y)
    for (int x = std::max(0, x0); x <= std::min(width_ - 1, x1); ++x) set_occupied(x, y, value);
}

OccupancyGrid read_map(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("map: missing header");
  std::istringstream hs(header);
  int width = 0;
  int height = 0;
  double resolution = 0.0;
  if (!(hs >> width >> height >> resolution)) throw std::runtime_error("map: header must be 'width height resolution_m'");
  if (width <= 0 || height <= 0 || !(resolution > 0.0)) throw std::runtime_error("map: invalid header values");
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  std::string row;
  for (int y = 0; y < height; ++y) {
    if (!std::getline(in, row)) throw std::runtime_error("map: expected " + std::to_string(height) + " rows");
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.size() != static_cast<std::size_t>(width)) {
      throw std::runtime_error("map: row " + std::to_string(y) + " has " + std::to_string(row.size()) + " cells");
    }
    for (char c : row) {
      if (c == '.') {
        cells.push_back(0);
      } else if (c == '#') {
        cells.push_back(1);
      } else {
        throw std::runtime_error(std::string("map: unexpected character '") + c + "'");
      }
    }
  }
  return OccupancyGrid(width, height, resolution, std::move(cells));
}

OccupancyGrid read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open map file '" + path + "'");
  return read_map(in);
}

void write_map(std::ostream& out, const OccupancyGrid& grid) {
  out << grid.width() << ' ' << grid.height() << ' ' << grid.resolution() << '\n';
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) out << (grid.occupied(x, y) ? '#' : '.');
    out << '\n';
  }
}

}  // namespace amha::grid
