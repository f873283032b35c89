#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "amha/algorithms.hpp"
#include "amha/grid/lattice_domain.hpp"
#include "amha/grid/map_generator.hpp"
#include "doctest.h"

using namespace amha;
using namespace amha::grid;

namespace {

std::shared_ptr<const GridWorld> world_of(OccupancyGrid g) { return GridWorld::make_default(std::move(g)); }

Scenario scenario(int sx, int sy, int st, int gx, int gy, std::optional<int> gt = std::nullopt) {
  return Scenario{{sx, sy, st}, gx, gy, gt};
}

// Backward Dijkstra over the whole lattice: optimal cost-to-goal per state.
std::vector<double> lattice_cost_to_go(LatticeDomain& d) {
  const std::size_t n = d.num_states();
  std::vector<std::vector<std::pair<StateId, Cost>>> reverse(n);
  std::vector<Edge> edges;
  for (StateId s = 0; s < n; ++s) {
    const auto st = d.state_of(s);
    if (footprint_collides(d.world().grid, d.world().footprint,
                           {double(st.x), double(st.y), heading_angle(st.theta, d.world().primitives.headings())}))
      continue;
    edges.clear();
    d.successors(s, edges);
    for (const auto& e : edges) reverse[e.target].push_back({s, e.cost});
  }
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, StateId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (StateId s = 0; s < n; ++s) {
    if (d.is_goal(s)) {
      dist[s] = 0;
      pq.push({0, s});
    }
  }
  while (!pq.empty()) {
    auto [c, u] = pq.top();
    pq.pop();
    if (c != dist[u]) continue;
    for (auto [v, w] : reverse[u]) {
      if (c + w < dist[v]) {
        dist[v] = c + w;
        pq.push({dist[v], v});
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("goal test") {
  LatticeDomain d(world_of(OccupancyGrid::empty(20, 20, 0.1)), scenario(3, 3, 0, 10, 10));
  CHECK(d.goal_test({10, 10, 7}));
  CHECK_FALSE(d.goal_test({11, 10, 7}));
  LatticeDomain h(world_of(OccupancyGrid::empty(20, 20, 0.1)), scenario(3, 3, 0, 10, 10, 4));
  CHECK(h.goal_test({10, 10, 4}));
  CHECK_FALSE(h.goal_test({10, 10, 5}));
}

TEST_CASE("euclidean heuristic") {
  LatticeDomain d(world_of(OccupancyGrid::empty(20, 20, 0.1)), scenario(3, 3, 0, 10, 10));
  CHECK(d.euclidean_h({10, 10, 3}) == 0.0);
  CHECK(d.euclidean_h({13, 14, 0}) == doctest::Approx(5 * 0.1 * 1000));
  for (int i = 0; i <= 3; ++i) CHECK(d.heuristic(d.id_of({10, 10, 9}), i) == 0.0);
}

TEST_CASE("empty grid successors: one per primitive; one cell straight costs scale * resolution") {
  auto world = world_of(OccupancyGrid::empty(30, 30, 1.0));
  LatticeDomain d(world, scenario(15, 15, 0, 2, 2));
  for (int h = 0; h < 16; ++h) {
    std::vector<Edge> out;
    d.successors(d.id_of({15, 15, h}), out);
    CHECK(out.size() == world->primitives.for_heading(h).size());
  }
  std::vector<Edge> out;
  d.successors(d.id_of({15, 15, 0}), out);
  bool found = false;
  for (const auto& e : out) found |= (e.target == d.id_of({16, 15, 0}) && e.cost == 1000);
  CHECK(found);
}

TEST_CASE("a primitive sweeping through an obstacle is dropped") {
  auto g = OccupancyGrid::empty(30, 30, 0.1);
  g.set_occupied(19, 15, true);
  LatticeDomain d(world_of(g), scenario(15, 15, 0, 2, 2));
  std::vector<Edge> out;
  d.successors(d.id_of({15, 15, 0}), out);
  for (const auto& e : out) CHECK(d.state_of(e.target).x < 19);
  CHECK(out.size() < d.world().primitives.for_heading(0).size());
}

TEST_CASE("construction errors") {
  auto g = OccupancyGrid::empty(20, 20, 0.1);
  g.set_occupied(5, 5, true);
  auto world = world_of(g);
  CHECK_THROWS_AS(LatticeDomain(world, scenario(5, 5, 0, 10, 10)), std::invalid_argument);
  CHECK_THROWS_AS(LatticeDomain(world, scenario(30, 5, 0, 10, 10)), std::invalid_argument);
  CHECK_THROWS_AS(LatticeDomain(world, scenario(10, 10, 16, 3, 3)), std::invalid_argument);
  auto empty_world = std::make_shared<const GridWorld>(GridWorld{OccupancyGrid::empty(10, 10, 0.1), RobotFootprint::point(), PrimitiveSet{}});
  CHECK_THROWS_AS(LatticeDomain(empty_world, scenario(3, 3, 0, 6, 6)), std::runtime_error);
}

TEST_CASE("euclidean h0 is consistent on every edge and admissible against a lattice oracle") {
  const auto g = random_obstacle_grid(20, 20, 0.1, 5, 4, 17);
  auto world = world_of(g);
  auto s = random_scenario(*world, 3);
  REQUIRE(s.has_value());
  LatticeDomain d(world, *s);
  std::vector<Edge> edges;
  std::size_t checked = 0;
  for (StateId id = 0; id < d.num_states(); ++id) {
    edges.clear();
    d.successors(id, edges);
    const double h = d.heuristic(id, 0);
    for (const auto& e : edges) {
      REQUIRE(h <= static_cast<double>(e.cost) + d.heuristic(e.target, 0) + 1e-6);
      ++checked;
    }
  }
  CHECK(checked > 3000);
  const auto opt = lattice_cost_to_go(d);
  for (StateId id = 0; id < d.num_states(); ++id)
    if (opt[id] < std::numeric_limits<double>::infinity()) REQUIRE(d.heuristic(id, 0) <= opt[id] + 1e-6);
}

TEST_CASE("on an empty map the zero-size field dominates euclid") {
  LatticeDomain d(world_of(OccupancyGrid::empty(20, 20, 0.1)), scenario(3, 3, 0, 12, 9));
  for (StateId id = 0; id < d.num_states(); id += 7) CHECK(d.heuristic(id, 1) >= d.heuristic(id, 0) - 1e-9);
  CHECK(d.block_radius(1) == 0.0);
  CHECK(d.block_radius(2) == doctest::Approx(0.1));
  CHECK(d.block_radius(3) == doctest::Approx(d.world().footprint.circumscribed_radius()));
}

TEST_CASE("a one-cell door raises the passage-blocked heuristic behind it") {
  auto g = OccupancyGrid::empty(31, 21, 0.1);
  g.fill_rect(15, 0, 15, 20);
  g.set_occupied(15, 10, false);
  LatticeDomain d(world_of(g), scenario(25, 10, 8, 5, 10));
  const auto behind = d.id_of({25, 10, 8});
  CHECK(d.field(3).at(25, 10) == std::numeric_limits<double>::infinity());
  CHECK(d.heuristic(behind, 3) == d.euclidean_h({25, 10, 8}));
  // Add a wide door far from the direct line: the blocked field detours
  // through it while the zero-size field squeezes through the narrow one.
  auto g2 = g;
  g2.set_occupied(15, 10, true);
  g2.set_occupied(15, 3, false);
  g2.fill_rect(15, 13, 15, 17, false);
  LatticeDomain d2(world_of(g2), scenario(20, 15, 8, 5, 3));
  const auto id = d2.id_of({20, 3, 8});
  CHECK(d2.field(3).at(20, 3) < std::numeric_limits<double>::infinity());
  CHECK(d2.heuristic(id, 3) > d2.heuristic(id, 1));
}

TEST_CASE("solution paths replay through primitives without collision") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto g = random_obstacle_grid(25, 25, 0.1, 6, 4, seed);
    auto world = world_of(g);
    auto s = random_scenario(*world, seed + 100);
    REQUIRE(s.has_value());
    LatticeDomain d(world, *s);
    PlannerConfig c;
    c.w1_init = 3;
    c.w2_init = 2;
    const auto r = run_anytime(d, c);
    if (!r.solved()) continue;
    for (const auto& rec : r.records) {
      Cost total = 0;
      for (std::size_t k = 0; k + 1 < rec.path.size(); ++k) {
        const auto a = d.state_of(rec.path[k]);
        const auto b = d.state_of(rec.path[k + 1]);
        bool replayed = false;
        for (const auto& p : world->primitives.for_heading(a.theta)) {
          if (a.x + p.dx != b.x || a.y + p.dy != b.y || p.end_heading != b.theta) continue;
          bool clear = true;
          for (const auto& pose : p.poses)
            clear = clear && !footprint_collides(world->grid, world->footprint, {a.x + pose.x, a.y + pose.y, pose.theta});
          if (clear) {
            replayed = true;
            total += p.cost;
            CHECK(d.edge_valid(rec.path[k], rec.path[k + 1], p.cost));
            break;
          }
        }
        REQUIRE(replayed);
      }
      CHECK(total == rec.cost);
      CHECK(d.is_goal(rec.path.back()));
    }
  }
}

TEST_CASE("scenario and map text forms round-trip") {
  const auto s = scenario(1, 2, 3, 4, 5, 6);
  const auto back = parse_scenario(to_string(s));
  CHECK(back.start == s.start);
  CHECK(back.goal_heading == s.goal_heading);
  const auto line = parse_scenario_line(to_line(s));
  CHECK(line.goal_x == 4);
  CHECK(line.goal_heading == 6);
  CHECK_FALSE(parse_scenario_line("1 2 3 4 5").goal_heading.has_value());
  CHECK_THROWS(parse_scenario_line("1 2 3 4"));
  CHECK_THROWS(parse_scenario("start 1 2\ngoal 3 4\n"));
  const auto g = random_obstacle_grid(12, 9, 0.05, 4, 3, 1);
  std::stringstream ss;
  write_map(ss, g);
  const auto g2 = read_map(ss);
  CHECK(g2.cells() == g.cells());
  CHECK(g2.resolution() == 0.05);
  std::istringstream bad("3 2 0.1\n...\n.x.\n");
  CHECK_THROWS(read_map(bad));
  std::istringstream short_rows("3 2 0.1\n...\n");
  CHECK_THROWS(read_map(short_rows));
}

TEST_CASE("generators are deterministic") {
  CHECK(random_obstacle_grid(20, 20, 0.1, 6, 4, 9).cells() == random_obstacle_grid(20, 20, 0.1, 6, 4, 9).cells());
  auto world = world_of(random_obstacle_grid(20, 20, 0.1, 6, 4, 9));
  const auto a = random_scenario(*world, 5);
  const auto b = random_scenario(*world, 5);
  REQUIRE(a.has_value());
  CHECK(a->start == b->start);
  CHECK(a->goal_x == b->goal_x);
}
