#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "amha/grid/footprint.hpp"
#include "amha/grid/occupancy_grid.hpp"
#include "doctest.h"

using namespace amha::grid;

namespace {

OccupancyGrid random_grid(std::mt19937_64& rng, int w, int h, double res, double density) {
  auto g = OccupancyGrid::empty(w, h, res);
  std::bernoulli_distribution occ(density);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) g.set_occupied(x, y, occ(rng));
  return g;
}

// Own point-in-convex-polygon test (vertices CCW).
bool inside(const std::vector<Point2>& poly, double x, double y) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    if ((b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x) < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rectangle radii") {
  const auto fp = RobotFootprint::rectangle(0.3, 0.2);
  CHECK(fp.inscribed_radius() == doctest::Approx(0.1));
  CHECK(fp.circumscribed_radius() == doctest::Approx(std::hypot(0.15, 0.1)));
  CHECK(fp.contains({0.14, 0.09}));
  CHECK_FALSE(fp.contains({0.16, 0.0}));
  CHECK(fp.distance_to({0.25, 0.0}) == doctest::Approx(0.1));
  CHECK(fp.distance_to({0.0, 0.0}) == 0.0);
}

TEST_CASE("polygon validation and orientation") {
  CHECK_THROWS_AS(RobotFootprint({{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(RobotFootprint({{1, 1}, {2, 1}, {2, 2}}), std::invalid_argument);  // origin outside
  CHECK_THROWS_AS(RobotFootprint({{-1, -1}, {1, -1}, {0, -0.5}, {1, 1}, {-1, 1}}), std::invalid_argument);  // concave
  const RobotFootprint cw({{-1, -1}, {-1, 1}, {1, 1}, {1, -1}});
  const auto& v = cw.vertices();
  double area = 0;
  for (std::size_t i = 0; i < v.size(); ++i) area += v[i].x * v[(i + 1) % v.size()].y - v[(i + 1) % v.size()].x * v[i].y;
  CHECK(area > 0);
}

TEST_CASE("point footprint on free cell is free; centered on an obstacle collides") {
  auto g = OccupancyGrid::empty(5, 5, 0.1);
  CHECK_FALSE(footprint_collides(g, RobotFootprint::point(), {2, 2, 0}));
  g.set_occupied(2, 2, true);
  CHECK(footprint_collides(g, RobotFootprint::point(), {2, 2, 0}));
  CHECK(footprint_collides(g, RobotFootprint::rectangle(0.3, 0.2), {2, 2, 0.7}));
  // Off-map cells count as obstacles.
  CHECK(footprint_collides(OccupancyGrid::empty(5, 5, 0.1), RobotFootprint::rectangle(0.3, 0.2), {0, 0, 0}));
}

TEST_CASE("square rotated 90 degrees collides exactly like the unrotated square") {
  std::mt19937_64 rng(8);
  const auto square = RobotFootprint::rectangle(0.35, 0.35);
  const auto turned = square.rotated(std::numbers::pi / 2);
  std::uniform_real_distribution<double> pos(3.0, 17.0), ang(-3.2, 3.2);
  for (int k = 0; k < 300; ++k) {
    const auto g = random_grid(rng, 20, 20, 0.1, 0.08);
    const Pose2 p{pos(rng), pos(rng), ang(rng)};
    CHECK(footprint_collides(g, square, {p.x, p.y, p.theta + std::numbers::pi / 2}) == footprint_collides(g, turned, p));
    CHECK(footprint_collides(g, square, p) == footprint_collides(g, turned, {p.x, p.y, p.theta - std::numbers::pi / 2}));
  }
}

TEST_CASE("covered cells agree with a 10x rasterization of the footprint") {
  std::mt19937_64 rng(4);
  const double res = 0.1;
  const double margin = res * std::sqrt(0.5);
  const auto fp = RobotFootprint::rectangle(0.3, 0.2);
  std::uniform_real_distribution<double> pos(5.0, 15.0), ang(-3.2, 3.2);
  for (int k = 0; k < 100; ++k) {
    const Pose2 pose{pos(rng), pos(rng), ang(rng)};
    const auto cells = footprint_cells(fp, res, pose);
    const std::set<std::pair<int, int>> covered(cells.begin(), cells.end());
    // Sample the placed polygon on a grid ten times finer than the map.
    std::vector<std::pair<double, double>> samples;
    const double c = std::cos(pose.theta), s = std::sin(pose.theta);
    for (double lx = -0.2; lx <= 0.2; lx += res / 10) {
      for (double ly = -0.2; ly <= 0.2; ly += res / 10) {
        if (!inside(fp.vertices(), lx, ly)) continue;
        samples.emplace_back(pose.x + (c * lx - s * ly) / res, pose.y + (s * lx + c * ly) / res);
      }
    }
    // Every cell containing a sample is covered.
    for (auto [x, y] : samples) CHECK(covered.contains({static_cast<int>(std::lround(x)), static_cast<int>(std::lround(y))}));
    // Every covered cell's center is close to a sample.
    for (auto [cx, cy] : covered) {
      double best = 1e9;
      for (auto [x, y] : samples) best = std::min(best, std::hypot(x - cx, y - cy) * res);
      CHECK(best <= margin + res / 10 + 1e-9);
    }
  }
}
