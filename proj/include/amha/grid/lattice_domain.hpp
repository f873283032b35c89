#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amha/grid/footprint.hpp"
#include "amha/grid/heuristic_field.hpp"
#include "amha/grid/motion_primitives.hpp"
#include "amha/grid/occupancy_grid.hpp"
#include "amha/search_domain.hpp"

namespace amha::grid {

struct LatticeState {
  int x = 0;
  int y = 0;
  int theta = 0;
  friend bool operator==(const LatticeState&, const LatticeState&) = default;
};

struct Scenario {
  LatticeState start;
  int goal_x = 0;
  int goal_y = 0;
  std::optional<int> goal_heading;
};

/// Scenario text: "x y theta" for the start, then "x y [theta]" for the
/// goal; an optional leading "start"/"goal" keyword is accepted.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario(const std::string& text);
Scenario read_scenario_file(const std::string& path);
std::string to_string(const Scenario& s);
/// Single-line form: "sx sy stheta gx gy [gtheta]".
Scenario parse_scenario_line(const std::string& line);
std::string to_line(const Scenario& s);

/// Immutable pieces shared by every planner on one map.
struct GridWorld {
  OccupancyGrid grid;
  RobotFootprint footprint;
  PrimitiveSet primitives;

  /// Default robot: 0.3 m x 0.2 m rectangle; 16-heading primitives with a
  /// 0.2 m minimum turning radius at the grid's resolution.
  static std::shared_ptr<const GridWorld> make_default(OccupancyGrid grid);
};

/// (x, y, heading) lattice over a GridWorld. Heuristic 0 is the euclidean
/// distance to the goal cell; 1..3 are Dijkstra fields with block radius 0,
/// the footprint's inscribed radius and its circumscribed radius, each
/// falling back to euclidean where the field is infinite.
class LatticeDomain : public SearchDomain {
 public:
  static constexpr int kNumInadmissible = 3;

  /// Throws std::invalid_argument for out-of-range poses or a colliding
  /// start, std::runtime_error when the primitive set is empty.
  LatticeDomain(std::shared_ptr<const GridWorld> world, const Scenario& scenario);

  StateId start_state() override { return id_of(scenario_.start); }
  bool is_goal(StateId s) const override { return goal_test(state_of(s)); }
  void successors(StateId s, std::vector<Edge>& out) override;
  int num_inadmissible() const override { return kNumInadmissible; }
  double heuristic(StateId s, int index) const override;
  std::size_t num_states() const override { return num_states_; }

  StateId id_of(const LatticeState& s) const {
    return static_cast<StateId>((static_cast<std::size_t>(s.y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(s.x)) *
                                    static_cast<std::size_t>(headings_) +
                                static_cast<std::size_t>(s.theta));
  }
  LatticeState state_of(StateId id) const {
    const int theta = static_cast<int>(id % static_cast<StateId>(headings_));
    const int cell = static_cast<int>(id / static_cast<StateId>(headings_));
    return {cell % width_, cell / width_, theta};
  }

  bool goal_test(const LatticeState& s) const;
  double euclidean_h(const LatticeState& s) const;
  const HeuristicField& field(int index) const { return fields_.at(static_cast<std::size_t>(index - 1)); }
  double block_radius(int index) const { return radii_.at(static_cast<std::size_t>(index - 1)); }

  /// Whether `from -> to` at `cost` is produced by a collision-free primitive.
  bool edge_valid(StateId from, StateId to, Cost cost) const;
  bool primitive_collides(const LatticeState& from, std::size_t primitive_index) const;

  const GridWorld& world() const { return *world_; }
  const Scenario& scenario() const { return scenario_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::shared_ptr<const GridWorld> world_;
  Scenario scenario_;
  int width_;
  int height_;
  int headings_;
  std::size_t num_states_;
  double metric_scale_;  // milli-units per cell
  std::vector<HeuristicField> fields_;
  std::vector<double> radii_;
  // Footprint cells swept by each primitive, relative to the start cell.
  std::vector<std::vector<std::pair<int, int>>> swept_cells_;
  std::vector<std::string> warnings_;
};

/// Cells swept by `p` when started from cell (0, 0), deduplicated.
std::vector<std::pair<int, int>> swept_cells(const MotionPrimitive& p, const RobotFootprint& footprint, double resolution);

}  // namespace amha::grid
