#include "amha/grid/heuristic_field.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace amha::grid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One-dimensional squared distance transform (Felzenszwalb & Huttenlocher).
void distance_transform_1d(const std::vector<double>& f, std::vector<double>& d) {
  const int n = static_cast<int>(f.size());
  std::vector<int> v(static_cast<std::size_t>(n));
  std::vector<double> z(static_cast<std::size_t>(n) + 1);
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  auto intersect = [&](int q, int p) {
    return ((f[static_cast<std::size_t>(q)] + q * q) - (f[static_cast<std::size_t>(p)] + p * p)) / (2.0 * q - 2.0 * p);
  };
  for (int q = 1; q < n; ++q) {
    if (f[static_cast<std::size_t>(q)] == kInf) continue;
    if (f[static_cast<std::size_t>(v[static_cast<std::size_t>(k)])] == kInf) {
      v[static_cast<std::size_t>(k)] = q;
      continue;
    }
    double s = intersect(q, v[static_cast<std::size_t>(k)]);
    while (k > 0 && s <= z[static_cast<std::size_t>(k)]) {
      --k;
      s = intersect(q, v[static_cast<std::size_t>(k)]);
    }
    ++k;
    v[static_cast<std::size_t>(k)] = q;
    z[static_cast<std::size_t>(k)] = s;
    z[static_cast<std::size_t>(k) + 1] = kInf;
  }
  d.assign(static_cast<std::size_t>(n), kInf);
  if (f[static_cast<std::size_t>(v[0])] == kInf) return;
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[static_cast<std::size_t>(k) + 1] < q) ++k;
    const int p = v[static_cast<std::size_t>(k)];
    d[static_cast<std::size_t>(q)] = (q - p) * (q - p) + f[static_cast<std::size_t>(p)];
  }
}

}  // namespace

std::size_t HeuristicField::unreachable_cells() const {
  std::size_t n = 0;
  for (double v : values) n += std::isinf(v) ? 1 : 0;
  return n;
}

std::vector<double> clearance_map(const OccupancyGrid& grid) {
  // Pad by one ring of obstacles so the border counts.
  const int w = grid.width() + 2;
  const int h = grid.height() + 2;
  std::vector<double> sq(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) sq[static_cast<std::size_t>(y * w + x)] = grid.occupied(x - 1, y - 1) ? 0.0 : kInf;

  std::vector<double> f;
  std::vector<double> d;
  for (int x = 0; x < w; ++x) {
    f.resize(static_cast<std::size_t>(h));
    for (int y = 0; y < h; ++y) f[static_cast<std::size_t>(y)] = sq[static_cast<std::size_t>(y * w + x)];
    distance_transform_1d(f, d);
    for (int y = 0; y < h; ++y) sq[static_cast<std::size_t>(y * w + x)] = d[static_cast<std::size_t>(y)];
  }
  for (int y = 0; y < h; ++y) {
    f.assign(sq.begin() + y * w, sq.begin() + (y + 1) * w);
    distance_transform_1d(f, d);
    std::copy(d.begin(), d.end(), sq.begin() + y * w);
  }

  std::vector<double> out(static_cast<std::size_t>(grid.width()) * static_cast<std::size_t>(grid.height()));
  for (int y = 0; y < grid.height(); ++y)
    for (int x = 0; x < grid.width(); ++x)
      out[static_cast<std::size_t>(y * grid.width() + x)] = std::sqrt(sq[static_cast<std::size_t>((y + 1) * w + x + 1)]) * grid.resolution();
  return out;
}

OccupancyGrid blocked_grid(const OccupancyGrid& grid, double block_radius) {
  if (block_radius <= 0.0) return grid;
  const auto clearance = clearance_map(grid);
  std::vector<std::uint8_t> cells = grid.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (clearance[i] <= block_radius + 1e-12) cells[i] = 1;
  }
  return OccupancyGrid(grid.width(), grid.height(), grid.resolution(), std::move(cells));
}

HeuristicField dijkstra_field(const OccupancyGrid& grid, int goal_x, int goal_y, double block_radius, double cost_scale) {
  const OccupancyGrid blocked = blocked_grid(grid, block_radius);
  HeuristicField field;
  field.width = grid.width();
  field.height = grid.height();
  field.values.assign(static_cast<std::size_t>(field.width) * static_cast<std::size_t>(field.height), kInf);
  if (blocked.occupied(goal_x, goal_y)) {
    field.goal_blocked = true;
    return field;
  }
  const double straight = grid.resolution() * cost_scale;
  const double diagonal = straight * std::sqrt(2.0);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  const int w = field.width;
  field.values[static_cast<std::size_t>(goal_y * w + goal_x)] = 0.0;
  open.push({0.0, goal_y * w + goal_x});
  while (!open.empty()) {
    const auto [d, idx] = open.top();
    open.pop();
    if (d > field.values[static_cast<std::size_t>(idx)]) continue;
    const int x = idx % w;
    const int y = idx / w;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int nx = x + dx;
        const int ny = y + dy;
        if (blocked.occupied(nx, ny)) continue;
        const double nd = d + ((dx != 0 && dy != 0) ? diagonal : straight);
        auto& slot = field.values[static_cast<std::size_t>(ny * w + nx)];
        if (nd < slot) {
          slot = nd;
          open.push({nd, ny * w + nx});
        }
      }
    }
  }
  return field;
}

}  // namespace amha::grid
