#include "amha/bench/bench_config.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "amha/grid/map_generator.hpp"
#include "amha/tiles/instance_io.hpp"

namespace amha::bench {
namespace {

constexpr const char* kTieBreak = "high_g_then_low_id";
constexpr const char* kGoalConvention = "blank_first";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double to_double(const std::string& v) {
  std::size_t used = 0;
  const double d = std::stod(v, &used);
  if (used != v.size()) throw std::invalid_argument("not a number: " + v);
  return d;
}

long long to_int(const std::string& v) {
  std::size_t used = 0;
  const long long n = std::stoll(v, &used);
  if (used != v.size()) throw std::invalid_argument("not an integer: " + v);
  return n;
}

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& v) {
  std::filesystem::path p(v);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t k) { return seed * 1'000'003ULL + k + 1; }

struct Pending {
  int random_tiles = 0;
  int random_width = 3;
  int random_height = 3;
  int random_scenarios = 0;
};

void apply(BenchConfig& c, Pending& pending, const std::string& key, const std::string& value,
           const std::filesystem::path& base) {
  if (const auto dot = key.find('.'); dot != std::string::npos) {
    const Mode mode = parse_mode(key.substr(0, dot));
    const std::string field = key.substr(dot + 1);
    if (field != "w1" && field != "w2" && field != "dw1" && field != "dw2") {
      throw std::invalid_argument("unknown override: " + key);
    }
    c.overrides[mode][field] = to_double(value);
  } else if (key == "domain") {
    if (value == "tiles") c.domain = DomainKind::kTiles;
    else if (value == "grid") c.domain = DomainKind::kGrid;
    else throw std::invalid_argument("unknown domain: " + value);
  } else if (key == "algorithms" || key == "algo") {
    c.algorithms.clear();
    for (const auto& w : split_words(value)) c.algorithms.push_back(parse_mode(w));
  } else if (key == "w1") {
    c.w1 = to_double(value);
  } else if (key == "w2") {
    c.w2 = to_double(value);
  } else if (key == "dw1") {
    c.dw1 = to_double(value);
  } else if (key == "dw2") {
    c.dw2 = to_double(value);
  } else if (key == "time_limit") {
    c.time_limit = to_double(value);
  } else if (key == "seed") {
    c.seed = static_cast<std::uint64_t>(to_int(value));
  } else if (key == "termination") {
    c.termination = parse_termination_check(value);
  } else if (key == "clock") {
    if (value == "wall") c.clock = ClockMode::kWall;
    else if (value == "expansions") c.clock = ClockMode::kExpansions;
    else throw std::invalid_argument("unknown clock: " + value);
  } else if (key == "seconds_per_expansion") {
    c.seconds_per_expansion = to_double(value);
  } else if (key == "max_states") {
    c.max_states = static_cast<std::size_t>(to_int(value));
  } else if (key == "jobs") {
    c.jobs = static_cast<int>(to_int(value));
  } else if (key == "oracle_max_states") {
    c.oracle_max_states = static_cast<std::size_t>(to_int(value));
  } else if (key == "tie_break") {
    if (value != kTieBreak) throw std::invalid_argument("unsupported tie_break: " + value);
  } else if (key == "goal") {
    if (value != kGoalConvention) throw std::invalid_argument("unsupported goal convention: " + value);
  } else if (key == "heuristics") {
    c.heuristics = static_cast<int>(to_int(value));
  } else if (key == "weight_max") {
    c.weight_max = to_double(value);
  } else if (key == "weights") {
    const auto w = split_words(value);
    if (w.size() != 3) throw std::invalid_argument("weights needs 3 values (misplaced manhattan conflict)");
    c.weights.push_back({to_double(w[0]), to_double(w[1]), to_double(w[2])});
  } else if (key == "instance") {
    c.boards.push_back(tiles::parse_board(value));
  } else if (key == "instances") {
    for (auto& b : tiles::read_instances_file(resolve(base, value).string())) c.boards.push_back(std::move(b));
  } else if (key == "random_tiles") {
    const auto w = split_words(value);
    if (w.size() != 3) throw std::invalid_argument("random_tiles needs: count width height");
    pending.random_tiles = static_cast<int>(to_int(w[0]));
    pending.random_width = static_cast<int>(to_int(w[1]));
    pending.random_height = static_cast<int>(to_int(w[2]));
  } else if (key == "map") {
    c.map = resolve(base, value);
  } else if (key == "random_map") {
    const auto w = split_words(value);
    if (w.size() != 4) throw std::invalid_argument("random_map needs: width height rects max_side");
    c.random_map = RandomMapSpec{static_cast<int>(to_int(w[0])), static_cast<int>(to_int(w[1])),
                                 static_cast<int>(to_int(w[2])), static_cast<int>(to_int(w[3]))};
  } else if (key == "resolution") {
    c.resolution = to_double(value);
  } else if (key == "primitives") {
    c.primitives = resolve(base, value);
  } else if (key == "scenario") {
    c.scenarios.push_back(grid::parse_scenario_line(value));
  } else if (key == "scenarios") {
    std::ifstream in(resolve(base, value));
    if (!in) throw std::invalid_argument("cannot open scenarios file: " + value);
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line.substr(0, line.find('#')));
      if (!line.empty()) c.scenarios.push_back(grid::parse_scenario_line(line));
    }
  } else if (key == "random_scenarios") {
    pending.random_scenarios = static_cast<int>(to_int(value));
  } else {
    throw std::invalid_argument("unknown key: " + key);
  }
}

}  // namespace

std::string_view to_string(DomainKind kind) { return kind == DomainKind::kTiles ? "tiles" : "grid"; }

PlannerConfig BenchConfig::planner_config(Mode mode) const {
  PlannerConfig p;
  p.mode = mode;
  p.w1_init = w1;
  p.w2_init = w2;
  p.dw1 = dw1;
  p.dw2 = dw2;
  if (mode == Mode::kARA || mode == Mode::kWeightedA) {
    p.w1_init = w1 * w2;
    p.w2_init = 1.0;
  } else if (mode == Mode::kAStar) {
    p.w1_init = 1.0;
    p.w2_init = 1.0;
  }
  if (auto it = overrides.find(mode); it != overrides.end()) {
    for (const auto& [field, value] : it->second) {
      if (field == "w1") p.w1_init = value;
      else if (field == "w2") p.w2_init = value;
      else if (field == "dw1") p.dw1 = value;
      else p.dw2 = value;
    }
  }
  p.time_budget = time_limit.value_or(0.0);
  p.termination_check = termination;
  p.clock = clock;
  p.seconds_per_expansion = seconds_per_expansion;
  p.max_states = max_states;
  return p;
}

std::vector<tiles::HeuristicWeights> BenchConfig::resolved_weights() const {
  if (!weights.empty()) return weights;
  return tiles::draw_weights(heuristics, seed ^ 0x9E3779B97F4A7C15ULL, weight_max);
}

void BenchConfig::validate() const {
  if (!time_limit) throw std::invalid_argument("time_limit is required");
  if (*time_limit < 0) throw std::invalid_argument("time_limit must be >= 0");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  for (Mode m : algorithms) planner_config(m).validate();
  if (domain == DomainKind::kTiles) {
    if (boards.empty()) throw std::invalid_argument("no tile instances");
    if (heuristics < 1) throw std::invalid_argument("heuristics must be >= 1");
    if (!weights.empty() && static_cast<int>(weights.size()) != heuristics) {
      throw std::invalid_argument("weights count does not match heuristics");
    }
  } else {
    if (map.empty() && !random_map) throw std::invalid_argument("grid domain needs map or random_map");
    if (scenarios.empty()) throw std::invalid_argument("no grid scenarios");
  }
}

std::shared_ptr<const grid::GridWorld> load_world(const BenchConfig& c) {
  grid::OccupancyGrid g = c.random_map ? grid::random_obstacle_grid(c.random_map->width, c.random_map->height, c.resolution,
                                                                    c.random_map->rects, c.random_map->max_side, c.seed)
                                       : grid::read_map_file(c.map.string());
  if (c.primitives.empty()) return grid::GridWorld::make_default(std::move(g));
  auto base = grid::GridWorld::make_default(g);
  return std::make_shared<const grid::GridWorld>(
      grid::GridWorld{std::move(g), base->footprint, grid::read_primitives_file(c.primitives.string())});
}

BenchConfig parse_bench_config(std::istream& in, const std::filesystem::path& base_dir) {
  BenchConfig c;
  Pending pending;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      apply(c, pending, key, value, base_dir);
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (c.weights.size() > 0 && c.heuristics != static_cast<int>(c.weights.size())) c.heuristics = static_cast<int>(c.weights.size());
  for (int k = 0; k < pending.random_tiles; ++k) {
    c.boards.push_back(tiles::random_solvable_board(pending.random_width, pending.random_height, instance_seed(c.seed, k)));
  }
  if (pending.random_scenarios > 0) {
    const auto world = load_world(c);
    for (int k = 0; k < pending.random_scenarios; ++k) {
      auto s = grid::random_scenario(*world, instance_seed(c.seed, k));
      if (!s) throw std::invalid_argument("could not place random scenario " + std::to_string(k));
      c.scenarios.push_back(*s);
    }
  }
  return c;
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path.string());
  return parse_bench_config(in, path.parent_path());
}

std::string write_manifest(const BenchConfig& c) {
  std::ostringstream os;
  os << "# replay: amha-bench bench --config <this file>\n";
  os << "domain = " << to_string(c.domain) << '\n';
  os << "algorithms =";
  for (Mode m : c.algorithms) os << ' ' << to_string(m);
  os << '\n';
  os << "w1 = " << exact(c.w1) << '\n'
     << "w2 = " << exact(c.w2) << '\n'
     << "dw1 = " << exact(c.dw1) << '\n'
     << "dw2 = " << exact(c.dw2) << '\n';
  for (const auto& [mode, fields] : c.overrides) {
    for (const auto& [field, value] : fields) os << to_string(mode) << '.' << field << " = " << exact(value) << '\n';
  }
  if (c.time_limit) os << "time_limit = " << exact(*c.time_limit) << '\n';
  os << "seed = " << c.seed << '\n'
     << "tie_break = " << kTieBreak << '\n'
     << "termination = " << to_string(c.termination) << '\n'
     << "clock = " << (c.clock == ClockMode::kWall ? "wall" : "expansions") << '\n'
     << "seconds_per_expansion = " << exact(c.seconds_per_expansion) << '\n'
     << "max_states = " << c.max_states << '\n'
     << "jobs = " << c.jobs << '\n'
     << "oracle_max_states = " << c.oracle_max_states << '\n';
  if (c.domain == DomainKind::kTiles) {
    os << "goal = " << kGoalConvention << '\n'
       << "heuristics = " << c.heuristics << '\n'
       << "weight_max = " << exact(c.weight_max) << '\n';
    for (const auto& w : c.resolved_weights()) {
      os << "weights = " << exact(w.misplaced) << ' ' << exact(w.manhattan) << ' ' << exact(w.conflict) << '\n';
    }
    for (const auto& b : c.boards) os << "instance = " << b.to_string() << '\n';
  } else {
    os << "resolution = " << exact(c.resolution) << '\n';
    if (c.random_map) {
      os << "random_map = " << c.random_map->width << ' ' << c.random_map->height << ' ' << c.random_map->rects << ' '
         << c.random_map->max_side << '\n';
    } else {
      os << "map = " << std::filesystem::absolute(c.map).lexically_normal().string() << '\n';
    }
    if (!c.primitives.empty()) {
      os << "primitives = " << std::filesystem::absolute(c.primitives).lexically_normal().string() << '\n';
    }
    for (const auto& s : c.scenarios) os << "scenario = " << grid::to_line(s) << '\n';
  }
  return os.str();
}

}  // namespace amha::bench
