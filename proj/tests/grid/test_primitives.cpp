#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "amha/grid/motion_primitives.hpp"
#include "doctest.h"

using namespace amha::grid;

TEST_CASE("heading directions") {
  CHECK(heading_direction(0, 16) == std::pair{1, 0});
  CHECK(heading_direction(1, 16) == std::pair{2, 1});
  CHECK(heading_direction(4, 16) == std::pair{0, 1});
  CHECK(heading_direction(2, 8) == std::pair{0, 1});
  CHECK(heading_angle(2, 16) == doctest::Approx(std::numbers::pi / 4));
  CHECK_THROWS(heading_direction(0, 12));
}

TEST_CASE("generated set: valid, complete per heading, consistent with euclid") {
  PrimitiveParams params;
  const auto set = PrimitiveSet::generate(params);
  CHECK(set.headings() == 16);
  const double min_radius_cells = params.min_turning_radius / params.resolution;
  const std::size_t per_heading = set.for_heading(0).size();
  CHECK(per_heading == 4);
  for (int h = 0; h < 16; ++h) {
    const auto prims = set.for_heading(h);
    CHECK(prims.size() == per_heading);
    std::set<int> ends;
    for (const auto& p : prims) {
      CHECK(p.start_heading == h);
      ends.insert(p.end_heading);
      CHECK_FALSE(check_primitive(p, min_radius_cells).has_value());
      CHECK(p.cost > 0);
      const double span = std::hypot(p.dx, p.dy) * params.resolution * params.cost_scale;
      CHECK(static_cast<double>(p.cost) >= span - 1e-9);
    }
    CHECK(ends == std::set<int>{(h + 15) % 16, h, (h + 1) % 16});
  }
  // One-cell straight ahead on heading 0 and the long move on heading 1.
  const auto& s0 = set.for_heading(0)[0];
  CHECK(s0.dx + s0.dy >= 1);
  bool found_short = false, found_long = false;
  for (const auto& p : set.for_heading(0)) found_short |= (p.dx == 1 && p.dy == 0 && p.end_heading == 0 && p.cost == 100);
  for (const auto& p : set.for_heading(1)) found_long |= (p.dx == 8 && p.dy == 4 && p.end_heading == 1);
  CHECK(found_short);
  CHECK(found_long);
}

TEST_CASE("check_primitive flags broken primitives") {
  MotionPrimitive p{0, 0, 2, 0, 200, {{0, 0, 0}, {2, 0, 0}}};
  CHECK(check_primitive(p, 0.0).has_value());  // jump of two cells
  MotionPrimitive q{0, 0, 1, 0, 100, {{0, 0, 0}, {0.5, 0, 0}, {1, 0, 0}}};
  CHECK_FALSE(check_primitive(q, 0.0).has_value());
  q.dx = 2;
  CHECK(check_primitive(q, 0.0).has_value());
}

TEST_CASE("primitive files round-trip") {
  const auto set = PrimitiveSet::generate({});
  std::stringstream ss;
  write_primitives(ss, set);
  const auto back = read_primitives(ss);
  REQUIRE(back.all().size() == set.all().size());
  for (std::size_t i = 0; i < set.all().size(); ++i) {
    const auto& a = set.all()[i];
    const auto& b = back.all()[i];
    CHECK(a.start_heading == b.start_heading);
    CHECK(a.end_heading == b.end_heading);
    CHECK(a.dx == b.dx);
    CHECK(a.dy == b.dy);
    CHECK(a.cost == b.cost);
    CHECK(a.poses.size() == b.poses.size());
  }
  std::istringstream bad("headings 16 cost_scale 1000\n0 0 100 2 0 0\n");
  CHECK_THROWS(read_primitives(bad));
  std::istringstream bad_header("heading 16\n");
  CHECK_THROWS(read_primitives(bad_header));
}

TEST_CASE("shipped primitive file matches the generator") {
  const auto shipped = read_primitives_file(AMHA_DATA_DIR "/primitives/default_16.mprim");
  const auto generated = PrimitiveSet::generate({});
  REQUIRE(shipped.all().size() == generated.all().size());
  for (std::size_t i = 0; i < generated.all().size(); ++i) {
    CHECK(shipped.all()[i].cost == generated.all()[i].cost);
    CHECK(shipped.all()[i].dx == generated.all()[i].dx);
    CHECK(shipped.all()[i].dy == generated.all()[i].dy);
  }
}
