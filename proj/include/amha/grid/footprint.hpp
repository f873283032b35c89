#pragma once

#include <utility>
#include <vector>

#include "amha/grid/occupancy_grid.hpp"

namespace amha::grid {

struct Point2 {
  double x;
  double y;
};

/// Robot pose on the lattice: x, y in cells (cell centers are integers),
/// theta in radians.
struct Pose2 {
  double x;
  double y;
  double theta;
};

/// Convex polygon in the robot frame, meters. Stored counter-clockwise.
class RobotFootprint {
 public:
  /// Throws std::invalid_argument unless the polygon has >= 3 vertices, is
  /// convex and strictly contains the origin.
  explicit RobotFootprint(std::vector<Point2> vertices);

  /// Axis-aligned rectangle centered on the origin, length along x.
  static RobotFootprint rectangle(double length, double width);
  /// Vanishingly small triangle around the origin.
  static RobotFootprint point();

  const std::vector<Point2>& vertices() const { return vertices_; }
  double inscribed_radius() const { return inscribed_; }
  double circumscribed_radius() const { return circumscribed_; }

  bool contains(Point2 p) const;
  /// 0 inside, otherwise distance to the boundary.
  double distance_to(Point2 p) const;

  RobotFootprint rotated(double angle) const;

 private:
  std::vector<Point2> vertices_;
  double inscribed_ = 0.0;
  double circumscribed_ = 0.0;
};

/// Cells whose centers lie within the footprint dilated by half a cell
/// diagonal, with the footprint placed at `pose`. Offsets are absolute cells.
std::vector<std::pair<int, int>> footprint_cells(const RobotFootprint& footprint, double resolution, Pose2 pose);

/// True iff some covered cell (see footprint_cells) is an obstacle or off the map.
bool footprint_collides(const OccupancyGrid& grid, const RobotFootprint& footprint, Pose2 pose);

}  // namespace amha::grid
