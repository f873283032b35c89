#include "amha/grid/lattice_domain.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace amha::grid {

namespace {

bool read_pose_line(std::istream& in, const char* keyword, std::vector<int>& values) {
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.front() == keyword) tokens.erase(tokens.begin());
    values.clear();
    for (const auto& t : tokens) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size()) throw std::runtime_error(std::string("scenario: bad token '") + t + "' in " + keyword + " line");
      values.push_back(v);
    }
    return true;
  }
  return false;
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::vector<int> values;
  if (!read_pose_line(in, "start", values) || values.size() != 3) throw std::runtime_error("scenario: start must be 'x y theta'");
  s.start = {values[0], values[1], values[2]};
  if (!read_pose_line(in, "goal", values) || values.size() < 2 || values.size() > 3) {
    throw std::runtime_error("scenario: goal must be 'x y [theta]'");
  }
  s.goal_x = values[0];
  s.goal_y = values[1];
  if (values.size() == 3) s.goal_heading = values[2];
  return s;
}

Scenario parse_scenario(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

Scenario read_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

Scenario parse_scenario_line(const std::string& line) {
  std::istringstream ls(line);
  std::vector<int> v;
  for (std::string t; ls >> t;) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size()) throw std::runtime_error("scenario: bad token '" + t + "'");
    v.push_back(x);
  }
  if (v.size() != 5 && v.size() != 6) throw std::runtime_error("scenario line must be 'sx sy stheta gx gy [gtheta]'");
  Scenario s;
  s.start = {v[0], v[1], v[2]};
  s.goal_x = v[3];
  s.goal_y = v[4];
  if (v.size() == 6) s.goal_heading = v[5];
  return s;
}

std::string to_line(const Scenario& s) {
  std::ostringstream os;
  os << s.start.x << ' ' << s.start.y << ' ' << s.start.theta << ' ' << s.goal_x << ' ' << s.goal_y;
  if (s.goal_heading) os << ' ' << *s.goal_heading;
  return os.str();
}

std::string to_string(const Scenario& s) {
  std::ostringstream os;
  os << "start " << s.start.x << ' ' << s.start.y << ' ' << s.start.theta << "\ngoal " << s.goal_x << ' ' << s.goal_y;
  if (s.goal_heading) os << ' ' << *s.goal_heading;
  os << '\n';
  return os.str();
}

std::shared_ptr<const GridWorld> GridWorld::make_default(OccupancyGrid grid) {
  PrimitiveParams params;
  params.resolution = grid.resolution();
  auto prims = PrimitiveSet::generate(params);
  return std::make_shared<const GridWorld>(GridWorld{std::move(grid), RobotFootprint::rectangle(0.3, 0.2), std::move(prims)});
}

std::vector<std::pair<int, int>> swept_cells(const MotionPrimitive& p, const RobotFootprint& footprint, double resolution) {
  std::vector<std::pair<int, int>> cells;
  for (const auto& pose : p.poses) {
    auto covered = footprint_cells(footprint, resolution, {pose.x, pose.y, pose.theta});
    cells.insert(cells.end(), covered.begin(), covered.end());
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

LatticeDomain::LatticeDomain(std::shared_ptr<const GridWorld> world, const Scenario& scenario)
    : world_(std::move(world)),
      scenario_(scenario),
      width_(world_->grid.width()),
      height_(world_->grid.height()),
      headings_(world_->primitives.headings()),
      num_states_(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_) * static_cast<std::size_t>(headings_)),
      metric_scale_(world_->grid.resolution() * world_->primitives.cost_scale()) {
  if (world_->primitives.empty()) throw std::runtime_error("LatticeDomain: primitive set is not loaded");
  const auto& grid = world_->grid;
  const auto& st = scenario_.start;
  if (!grid.in_bounds(st.x, st.y) || st.theta < 0 || st.theta >= headings_) throw std::invalid_argument("LatticeDomain: start out of range");
  if (!grid.in_bounds(scenario_.goal_x, scenario_.goal_y)) throw std::invalid_argument("LatticeDomain: goal out of range");
  if (scenario_.goal_heading && (*scenario_.goal_heading < 0 || *scenario_.goal_heading >= headings_)) {
    throw std::invalid_argument("LatticeDomain: goal heading out of range");
  }
  if (num_states_ >= kNoState) throw std::invalid_argument("LatticeDomain: lattice too large for 32-bit ids");
  const double start_theta = world_->primitives.for_heading(st.theta).empty()
                                 ? 0.0
                                 : world_->primitives.for_heading(st.theta).front().poses.front().theta;
  if (footprint_collides(grid, world_->footprint, {static_cast<double>(st.x), static_cast<double>(st.y), start_theta})) {
    throw std::invalid_argument("LatticeDomain: start pose collides");
  }

  radii_ = {0.0, world_->footprint.inscribed_radius(), world_->footprint.circumscribed_radius()};
  for (double r : radii_) {
    fields_.push_back(dijkstra_field(grid, scenario_.goal_x, scenario_.goal_y, r, world_->primitives.cost_scale()));
    if (fields_.back().goal_blocked) {
      warnings_.push_back("goal cell blocked at block radius " + std::to_string(r) + " m; heuristic " +
                          std::to_string(fields_.size()) + " falls back to euclidean");
    }
  }
  swept_cells_.reserve(world_->primitives.all().size());
  for (const auto& p : world_->primitives.all()) swept_cells_.push_back(swept_cells(p, world_->footprint, grid.resolution()));
}

bool LatticeDomain::goal_test(const LatticeState& s) const {
  if (s.x != scenario_.goal_x || s.y != scenario_.goal_y) return false;
  return !scenario_.goal_heading || s.theta == *scenario_.goal_heading;
}

double LatticeDomain::euclidean_h(const LatticeState& s) const {
  return std::hypot(static_cast<double>(s.x - scenario_.goal_x), static_cast<double>(s.y - scenario_.goal_y)) * metric_scale_;
}

double LatticeDomain::heuristic(StateId s, int index) const {
  const LatticeState ls = state_of(s);
  if (index == 0) return euclidean_h(ls);
  const double v = fields_[static_cast<std::size_t>(index - 1)].at(ls.x, ls.y);
  return std::isfinite(v) ? v : euclidean_h(ls);
}

bool LatticeDomain::primitive_collides(const LatticeState& from, std::size_t primitive_index) const {
  const auto& grid = world_->grid;
  for (const auto& [dx, dy] : swept_cells_[primitive_index]) {
    if (grid.occupied(from.x + dx, from.y + dy)) return true;
  }
  return false;
}

void LatticeDomain::successors(StateId s, std::vector<Edge>& out) {
  const LatticeState from = state_of(s);
  const auto prims = world_->primitives.for_heading(from.theta);
  const auto base = static_cast<std::size_t>(prims.data() - world_->primitives.all().data());
  for (std::size_t k = 0; k < prims.size(); ++k) {
    const auto& p = prims[k];
    if (primitive_collides(from, base + k)) continue;
    out.push_back({id_of({from.x + p.dx, from.y + p.dy, p.end_heading}), p.cost});
  }
}

bool LatticeDomain::edge_valid(StateId from, StateId to, Cost cost) const {
  const LatticeState a = state_of(from);
  const LatticeState b = state_of(to);
  for (const auto& p : world_->primitives.for_heading(a.theta)) {
    if (a.x + p.dx != b.x || a.y + p.dy != b.y || p.end_heading != b.theta || p.cost != cost) continue;
    bool clear = true;
    for (const auto& pose : p.poses) {
      if (footprint_collides(world_->grid, world_->footprint, {a.x + pose.x, a.y + pose.y, pose.theta})) {
        clear = false;
        break;
      }
    }
    if (clear) return true;
  }
  return false;
}

}  // namespace amha::grid
