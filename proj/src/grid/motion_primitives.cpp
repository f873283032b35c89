#include "amha/grid/motion_primitives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace amha::grid {

namespace {

constexpr std::array<std::pair<int, int>, 8> kDirections8 = {{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
constexpr std::array<std::pair<int, int>, 16> kDirections16 = {{{1, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 1}, {-1, 2}, {-1, 1}, {-2, 1},
                                                                {-1, 0}, {-2, -1}, {-1, -1}, {-1, -2}, {0, -1}, {1, -2}, {1, -1}, {2, -1}}};

double wrap_angle(double a) {
  while (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
  while (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

// Piecewise path: an optional straight lead-in, a circular arc, an optional
// straight lead-out. Lengths in cells.
struct TurnShape {
  double lead = 0.0;
  double radius = 0.0;
  double sweep = 0.0;  // signed
  double tail = 0.0;
  double length() const { return lead + radius * std::abs(sweep) + tail; }
};

SweptPose sample_turn(const TurnShape& t, double theta0, double s) {
  const double ux = std::cos(theta0);
  const double uy = std::sin(theta0);
  if (s <= t.lead) return {s * ux, s * uy, theta0};
  double x = t.lead * ux;
  double y = t.lead * uy;
  const double arc = t.radius * std::abs(t.sweep);
  const double sign = t.sweep >= 0.0 ? 1.0 : -1.0;
  const double along = std::min(s - t.lead, arc);
  const double theta = theta0 + sign * along / t.radius;
  x += sign * t.radius * (std::sin(theta) - std::sin(theta0));
  y += sign * t.radius * (std::cos(theta0) - std::cos(theta));
  const double rest = s - t.lead - along;
  return {x + rest * std::cos(theta), y + rest * std::sin(theta), theta};
}

std::vector<SweptPose> sample(const TurnShape& t, double theta0, double step) {
  const double length = t.length();
  const int n = std::max(1, static_cast<int>(std::ceil(length / step - 1e-9)));
  std::vector<SweptPose> poses;
  poses.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) poses.push_back(sample_turn(t, theta0, length * i / n));
  return poses;
}

MotionPrimitive make_primitive(int start, int end, const TurnShape& shape, double theta0, const PrimitiveParams& p) {
  MotionPrimitive prim;
  prim.start_heading = start;
  prim.end_heading = end;
  prim.poses = sample(shape, theta0, p.sample_step);
  prim.poses.front() = {0.0, 0.0, theta0};
  prim.dx = static_cast<int>(std::lround(prim.poses.back().x));
  prim.dy = static_cast<int>(std::lround(prim.poses.back().y));
  prim.poses.back().x = prim.dx;
  prim.poses.back().y = prim.dy;
  prim.poses.back().theta = heading_angle(end, p.headings);
  // Ceil keeps every edge at least as long as the straight-line distance it spans.
  prim.cost = static_cast<Cost>(std::ceil(shape.length() * p.resolution * p.cost_scale - 1e-9));
  return prim;
}

// Cheapest arc-plus-straight (either order) from heading theta0 to theta1
// landing exactly on an integer cell with radius >= min_radius (cells).
std::optional<TurnShape> best_turn(double theta0, double theta1, double min_radius) {
  const double sweep = wrap_angle(theta1 - theta0);
  const double sign = sweep >= 0.0 ? 1.0 : -1.0;
  // Unit-radius arc displacement.
  const double ax = sign * (std::sin(theta1) - std::sin(theta0));
  const double ay = sign * (std::cos(theta0) - std::cos(theta1));
  std::optional<TurnShape> best;
  double best_len = std::numeric_limits<double>::infinity();
  constexpr int kWindow = 12;
  for (int ey = -kWindow; ey <= kWindow; ++ey) {
    for (int ex = -kWindow; ex <= kWindow; ++ex) {
      if (ex == 0 && ey == 0) continue;
      for (int lead_first = 0; lead_first < 2; ++lead_first) {
        const double ux = std::cos(lead_first ? theta0 : theta1);
        const double uy = std::sin(lead_first ? theta0 : theta1);
        // Solve E = R * a + L * u.
        const double det = ax * uy - ay * ux;
        if (std::abs(det) < 1e-12) continue;
        const double radius = (ex * uy - ey * ux) / det;
        const double straight = (ax * ey - ay * ex) / det;
        if (radius < min_radius - 1e-9 || straight < -1e-9) continue;
        TurnShape t;
        t.radius = radius;
        t.sweep = sweep;
        (lead_first ? t.lead : t.tail) = std::max(0.0, straight);
        const double len = t.length();
        if (len < best_len - 1e-9) {
          best_len = len;
          best = t;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::pair<int, int> heading_direction(int heading, int headings) {
  if (headings == 8) return kDirections8.at(static_cast<std::size_t>(heading));
  if (headings == 16) return kDirections16.at(static_cast<std::size_t>(heading));
  throw std::invalid_argument("heading_direction: only 8 or 16 headings are supported");
}

double heading_angle(int heading, int headings) {
  const auto [dx, dy] = heading_direction(heading, headings);
  return std::atan2(static_cast<double>(dy), static_cast<double>(dx));
}

PrimitiveSet::PrimitiveSet(int headings, std::vector<MotionPrimitive> primitives, double cost_scale)
    : headings_(headings), cost_scale_(cost_scale), primitives_(std::move(primitives)) {
  if (headings <= 0) throw std::invalid_argument("PrimitiveSet: headings must be positive");
  for (const auto& p : primitives_) {
    if (p.start_heading < 0 || p.start_heading >= headings || p.end_heading < 0 || p.end_heading >= headings) {
      throw std::invalid_argument("PrimitiveSet: heading out of range");
    }
    if (p.poses.empty()) throw std::invalid_argument("PrimitiveSet: primitive without poses");
    if (p.cost <= 0) throw std::invalid_argument("PrimitiveSet: primitive cost must be positive");
  }
  std::stable_sort(primitives_.begin(), primitives_.end(),
                   [](const MotionPrimitive& a, const MotionPrimitive& b) { return a.start_heading < b.start_heading; });
  offsets_.assign(static_cast<std::size_t>(headings) + 1, 0);
  for (const auto& p : primitives_) ++offsets_[static_cast<std::size_t>(p.start_heading) + 1];
  for (std::size_t h = 1; h < offsets_.size(); ++h) offsets_[h] += offsets_[h - 1];
}

std::span<const MotionPrimitive> PrimitiveSet::for_heading(int heading) const {
  if (heading < 0 || heading >= headings_) return {};
  const auto h = static_cast<std::size_t>(heading);
  return std::span<const MotionPrimitive>(primitives_).subspan(offsets_[h], offsets_[h + 1] - offsets_[h]);
}

PrimitiveSet PrimitiveSet::generate(const PrimitiveParams& params) {
  const int H = params.headings;
  const double min_radius = params.min_turning_radius / params.resolution;
  std::vector<MotionPrimitive> prims;
  for (int h = 0; h < H; ++h) {
    const double theta = heading_angle(h, H);
    const auto [dx, dy] = heading_direction(h, H);
    const double unit = std::hypot(dx, dy);
    TurnShape straight;
    straight.lead = unit;
    prims.push_back(make_primitive(h, h, straight, theta, params));
    const int reps = std::max(1, params.long_straight_cells / std::max(std::abs(dx), std::abs(dy)));
    if (reps > 1) {
      straight.lead = unit * reps;
      prims.push_back(make_primitive(h, h, straight, theta, params));
    }
    for (int turn : {1, -1}) {
      const int next = ((h + turn) % H + H) % H;
      if (auto shape = best_turn(theta, heading_angle(next, H), min_radius)) {
        prims.push_back(make_primitive(h, next, *shape, theta, params));
      }
    }
  }
  return PrimitiveSet(H, std::move(prims), params.cost_scale);
}

std::optional<std::string> check_primitive(const MotionPrimitive& p, double min_radius_cells) {
  if (p.poses.size() < 2) return "fewer than two poses";
  const auto& first = p.poses.front();
  if (std::abs(first.x) > 1e-9 || std::abs(first.y) > 1e-9) return "first pose is not at the origin";
  const auto& last = p.poses.back();
  if (std::abs(last.x - p.dx) > 1e-6 || std::abs(last.y - p.dy) > 1e-6) return "last pose does not land on (dx, dy)";
  for (std::size_t i = 1; i < p.poses.size(); ++i) {
    const auto& a = p.poses[i - 1];
    const auto& b = p.poses[i];
    if (std::abs(b.x - a.x) > 1.0 + 1e-9 || std::abs(b.y - a.y) > 1.0 + 1e-9) {
      return "pose " + std::to_string(i) + " jumps more than one cell";
    }
    const double turn = std::abs(wrap_angle(b.theta - a.theta));
    if (turn > 1e-9) {
      const double chord = std::hypot(b.x - a.x, b.y - a.y);
      const double radius = chord / (2.0 * std::sin(turn / 2.0));
      if (radius < min_radius_cells * (1.0 - 1e-6)) {
        return "turning radius " + std::to_string(radius) + " below minimum at pose " + std::to_string(i);
      }
    }
  }
  return std::nullopt;
}

PrimitiveSet read_primitives(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error("primitives line " + std::to_string(lineno) + ": " + what);
  };
  if (!next_line()) throw std::runtime_error("primitives: missing header");
  std::istringstream hs(line);
  std::string kw_headings;
  std::string kw_scale;
  int headings = 0;
  double scale = 0.0;
  if (!(hs >> kw_headings >> headings >> kw_scale >> scale) || kw_headings != "headings" || kw_scale != "cost_scale") {
    throw fail("header must be 'headings H cost_scale S'");
  }
  std::vector<MotionPrimitive> prims;
  while (next_line()) {
    std::istringstream ls(line);
    MotionPrimitive p;
    long long cost = 0;
    int k = 0;
    if (!(ls >> p.start_heading >> p.end_heading >> cost >> k) || k < 1) throw fail("expected 'theta_start theta_end cost_milli k'");
    p.cost = cost;
    for (int i = 0; i < k; ++i) {
      SweptPose pose{};
      if (!(ls >> pose.x >> pose.y >> pose.theta)) throw fail("expected " + std::to_string(k) + " poses");
      p.poses.push_back(pose);
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing tokens");
    p.dx = static_cast<int>(std::lround(p.poses.back().x));
    p.dy = static_cast<int>(std::lround(p.poses.back().y));
    prims.push_back(std::move(p));
  }
  try {
    return PrimitiveSet(headings, std::move(prims), scale);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("primitives: ") + e.what());
  }
}

PrimitiveSet read_primitives_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open primitive file '" + path + "'");
  return read_primitives(in);
}

void write_primitives(std::ostream& out, const PrimitiveSet& set) {
  out << "headings " << set.headings() << " cost_scale " << set.cost_scale() << '\n';
  const auto old_precision = out.precision(10);
  for (const auto& p : set.all()) {
    out << p.start_heading << ' ' << p.end_heading << ' ' << p.cost << ' ' << p.poses.size() << ' ';
    for (const auto& pose : p.poses) out << ' ' << pose.x << ' ' << pose.y << ' ' << pose.theta;
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace amha::grid
