#include "amha/grid/footprint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace amha::grid {

namespace {

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

}  // namespace

RobotFootprint::RobotFootprint(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw std::invalid_argument("RobotFootprint: need at least 3 vertices");
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    area2 += a.x * b.y - b.x * a.y;
  }
  if (area2 == 0.0) throw std::invalid_argument("RobotFootprint: degenerate polygon");
  if (area2 < 0.0) std::reverse(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) < 0.0) {
      throw std::invalid_argument("RobotFootprint: polygon is not convex");
    }
    if (cross(vertices_[i], vertices_[(i + 1) % n], Point2{0.0, 0.0}) <= 0.0) {
      throw std::invalid_argument("RobotFootprint: polygon must strictly contain the origin");
    }
  }
  inscribed_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    inscribed_ = std::min(inscribed_, segment_distance({0.0, 0.0}, vertices_[i], vertices_[(i + 1) % n]));
    circumscribed_ = std::max(circumscribed_, std::hypot(vertices_[i].x, vertices_[i].y));
  }
}

RobotFootprint RobotFootprint::rectangle(double length, double width) {
  const double hl = length / 2.0;
  const double hw = width / 2.0;
  return RobotFootprint({{-hl, -hw}, {hl, -hw}, {hl, hw}, {-hl, hw}});
}

RobotFootprint RobotFootprint::point() {
  constexpr double e = 1e-6;
  return RobotFootprint({{e, 0.0}, {-e, e}, {-e, -e}});
}

bool RobotFootprint::contains(Point2 p) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0.0) return false;
  }
  return true;
}

double RobotFootprint::distance_to(Point2 p) const {
  if (contains(p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) best = std::min(best, segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
  return best;
}

RobotFootprint RobotFootprint::rotated(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point2> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back({c * v.x - s * v.y, s * v.x + c * v.y});
  return RobotFootprint(std::move(out));
}

std::vector<std::pair<int, int>> footprint_cells(const RobotFootprint& footprint, double resolution, Pose2 pose) {
  const double margin = resolution * std::sqrt(0.5);
  const double reach = (footprint.circumscribed_radius() + margin) / resolution;
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  std::vector<std::pair<int, int>> cells;
  const int x0 = static_cast<int>(std::floor(pose.x - reach));
  const int x1 = static_cast<int>(std::ceil(pose.x + reach));
  const int y0 = static_cast<int>(std::floor(pose.y - reach));
  const int y1 = static_cast<int>(std::ceil(pose.y + reach));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double wx = (x - pose.x) * resolution;
      const double wy = (y - pose.y) * resolution;
      const Point2 local{c * wx + s * wy, -s * wx + c * wy};
      if (footprint.distance_to(local) <= margin) cells.emplace_back(x, y);
    }
  }
  return cells;
}

bool footprint_collides(const OccupancyGrid& grid, const RobotFootprint& footprint, Pose2 pose) {
  for (const auto& [x, y] : footprint_cells(footprint, grid.resolution(), pose)) {
    if (grid.occupied(x, y)) return true;
  }
  return false;
}

}  // namespace amha::grid
