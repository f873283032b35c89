#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amha/types.hpp"

namespace amha::grid {

/// Intermediate pose of a primitive: cell offsets from the start cell's
/// center, heading in radians.
struct SweptPose {
  double x;
  double y;
  double theta;
};

struct MotionPrimitive {
  int start_heading = 0;
  int end_heading = 0;
  int dx = 0;  ///< end cell offset (rounded last pose)
  int dy = 0;
  Cost cost = 0;  ///< milli-units
  std::vector<SweptPose> poses;  ///< first is the start pose, last the end pose
};

struct PrimitiveParams {
  int headings = 16;
  double resolution = 0.1;          ///< meters per cell
  double min_turning_radius = 0.2;  ///< meters
  int long_straight_cells = 8;
  double sample_step = 0.25;        ///< cells between swept poses
  double cost_scale = 1000.0;
};

/// Lattice heading directions: 8 uses the king moves; 16 adds the knight
/// directions (2,1), (1,2), ... Angles are atan2 of the integer direction.
std::pair<int, int> heading_direction(int heading, int headings);
double heading_angle(int heading, int headings);

class PrimitiveSet {
 public:
  PrimitiveSet() = default;
  /// Throws std::invalid_argument on headings out of range or empty pose lists.
  PrimitiveSet(int headings, std::vector<MotionPrimitive> primitives, double cost_scale = 1000.0);

  /// Straight short and long moves plus minimum-radius arcs to the two
  /// neighbouring headings, for every heading.
  static PrimitiveSet generate(const PrimitiveParams& params);

  bool empty() const { return primitives_.empty(); }
  int headings() const { return headings_; }
  double cost_scale() const { return cost_scale_; }
  const std::vector<MotionPrimitive>& all() const { return primitives_; }
  std::span<const MotionPrimitive> for_heading(int heading) const;

 private:
  int headings_ = 0;
  double cost_scale_ = 1000.0;
  std::vector<MotionPrimitive> primitives_;  // grouped by start heading
  std::vector<std::size_t> offsets_;         // headings_ + 1 entries
};

/// nullopt when the pose sequence is continuous (steps within one cell),
/// the end pose lands on (dx, dy), and the local turning radius never drops
/// below `min_radius_cells`.
std::optional<std::string> check_primitive(const MotionPrimitive& p, double min_radius_cells);

/// Header "headings H cost_scale S"; then one primitive per line:
/// "theta_start theta_end cost_milli k  x0 y0 t0 ... x(k-1) y(k-1) t(k-1)".
PrimitiveSet read_primitives(std::istream& in);
PrimitiveSet read_primitives_file(const std::string& path);
void write_primitives(std::ostream& out, const PrimitiveSet& set);

}  // namespace amha::grid
