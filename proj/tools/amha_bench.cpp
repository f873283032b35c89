// amha-bench: solve single tile or grid instances, run benchmark matrices,
// and verify runs against an exhaustive oracle.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "amha/algorithms.hpp"
#include "amha/bench/matrix.hpp"
#include "amha/grid/lattice_domain.hpp"
#include "amha/tiles/instance_io.hpp"
#include "amha/tiles/tile_domain.hpp"

using namespace amha;

namespace {

struct SearchFlags {
  std::string algo = "amha";
  double w1 = 5.0;
  double w2 = 5.0;
  double dw1 = 1.0;
  double dw2 = 1.0;
  double time_limit = 10.0;
  std::uint64_t seed = 1;
  std::string termination = "per_expansion";
  std::size_t max_states = 0;
  std::string out;
  bool print_path = false;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--algo", f.algo, "amha | mha | ara | wa | astar")->capture_default_str();
  cmd->add_option("--w1", f.w1, "initial w1 (ara/wa start at w1*w2)")->capture_default_str();
  cmd->add_option("--w2", f.w2, "initial w2")->capture_default_str();
  cmd->add_option("--dw1", f.dw1, "w1 decrement per iteration")->capture_default_str();
  cmd->add_option("--dw2", f.dw2, "w2 decrement per iteration")->capture_default_str();
  cmd->add_option("--time-limit", f.time_limit, "seconds; 0 = unlimited")->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for random instances and heuristic weights")->capture_default_str();
  cmd->add_option("--termination", f.termination, "per_expansion | per_round")->capture_default_str();
  cmd->add_option("--max-states", f.max_states, "stop after interning this many states; 0 = no cap");
  cmd->add_option("--out", f.out, "write the cost/bound curve CSV here");
  cmd->add_flag("--print-path", f.print_path, "print the final path");
}

PlannerConfig planner_config(const SearchFlags& f) {
  bench::BenchConfig c;
  c.w1 = f.w1;
  c.w2 = f.w2;
  c.dw1 = f.dw1;
  c.dw2 = f.dw2;
  c.time_limit = f.time_limit;
  c.termination = parse_termination_check(f.termination);
  c.max_states = f.max_states;
  PlannerConfig p = c.planner_config(parse_mode(f.algo));
  p.validate();
  return p;
}

void print_record(const SolutionRecord& r) {
  std::printf("iteration %d  w1 %.3f  w2 %.3f  bound %.3f  cost %lld  time %.6f s  expansions %llu\n", r.iteration, r.w1, r.w2,
              r.bound, static_cast<long long>(r.cost), r.elapsed, static_cast<unsigned long long>(r.expansions_total));
  std::fflush(stdout);
}

int finish(const RunResult& result, const SearchFlags& f) {
  std::printf("status %s  expansions %llu  elapsed %.6f s\n", to_string(result.status),
              static_cast<unsigned long long>(result.expansions_total), result.elapsed);
  if (!f.out.empty()) {
    std::ofstream out(f.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + f.out);
    bench::write_curve_csv(out, result.records);
  }
  return result.solved() ? 0 : 2;
}

int solve_tiles(const SearchFlags& f, const std::string& board_text, const std::string& random, int heuristics,
                double weight_max) {
  tiles::TileBoard board = tiles::TileBoard::goal(3, 3);
  if (!board_text.empty()) {
    board = tiles::parse_board(board_text);
  } else {
    int w = 0, h = 0;
    if (std::sscanf(random.c_str(), "%dx%d", &w, &h) != 2) throw std::invalid_argument("--random expects WxH, e.g. 4x4");
    board = tiles::random_solvable_board(w, h, f.seed);
  }
  tiles::TileDomain domain(board, tiles::draw_weights(heuristics, f.seed ^ 0x9E3779B97F4A7C15ULL, weight_max));
  std::printf("board %s\n", board.to_string().c_str());
  for (std::size_t i = 0; i < domain.weights().size(); ++i) {
    const auto& w = domain.weights()[i];
    std::printf("h%zu = %.4f*MT + %.4f*MD + %.4f*LC\n", i + 1, w.misplaced, w.manhattan, w.conflict);
  }
  const RunResult result = run_planner(domain, planner_config(f), print_record);
  if (f.print_path && result.solved()) {
    for (StateId s : result.records.back().path) std::printf("%s\n", domain.board(s).to_string().c_str());
  }
  return finish(result, f);
}

int solve_grid(const SearchFlags& f, const std::string& map, const std::string& scenario, const std::string& primitives) {
  bench::BenchConfig c;
  c.domain = bench::DomainKind::kGrid;
  c.map = map;
  c.primitives = primitives;
  auto world = bench::load_world(c);
  grid::LatticeDomain domain(world, grid::parse_scenario_line(scenario));
  for (const auto& w : domain.warnings()) std::fprintf(stderr, "warning: %s\n", w.c_str());
  const RunResult result = run_planner(domain, planner_config(f), print_record);
  if (f.print_path && result.solved()) {
    for (StateId s : result.records.back().path) {
      const auto st = domain.state_of(s);
      std::printf("%d %d %d\n", st.x, st.y, st.theta);
    }
  }
  return finish(result, f);
}

/// Config text plus command-line overrides appended as later lines, so
/// they win and random draws use the overridden seed.
bench::BenchConfig load_with_overrides(const std::string& path, const std::vector<std::string>& extra) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  std::stringstream text;
  text << in.rdbuf() << '\n';
  for (const auto& line : extra) text << line << '\n';
  return bench::parse_bench_config(text, std::filesystem::path(path).parent_path());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anytime multi-heuristic search benchmarks"};
  app.require_subcommand(1);

  SearchFlags flags;
  std::string board_text, random_dims = "3x3";
  int heuristics = 3;
  double weight_max = 5.0;
  auto* tiles_cmd = app.add_subcommand("solve-tiles", "solve one sliding-tile instance");
  add_search_flags(tiles_cmd, flags);
  tiles_cmd->add_option("--board", board_text, "\"w h t0 t1 ...\" (row-major, 0 = blank)");
  tiles_cmd->add_option("--random", random_dims, "random solvable WxH board from --seed")->capture_default_str();
  tiles_cmd->add_option("--heuristics", heuristics, "number of inadmissible heuristics")->capture_default_str();
  tiles_cmd->add_option("--weight-max", weight_max, "heuristic weights drawn from [0, max]")->capture_default_str();

  std::string map, scenario, primitives;
  auto* grid_cmd = app.add_subcommand("solve-grid", "solve one (x, y, heading) lattice instance");
  add_search_flags(grid_cmd, flags);
  grid_cmd->add_option("--map", map, "occupancy map file")->required();
  grid_cmd->add_option("--scenario", scenario, "\"sx sy stheta gx gy [gtheta]\"")->required();
  grid_cmd->add_option("--primitives", primitives, "motion primitive file (default: generated)");

  std::string config_path, out_dir = "bench_out", algo_list;
  std::vector<std::string> overrides;
  int jobs = 0;
  auto add_matrix_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "benchmark config file")->required();
    cmd->add_option("--algo", algo_list, "override algorithms (comma separated)");
    for (const char* key : {"w1", "w2", "dw1", "dw2", "seed"}) {
      cmd->add_option_function<std::string>(std::string("--") + key,
                                            [&overrides, key](const std::string& v) { overrides.push_back(std::string(key) + " = " + v); },
                                            std::string("override the config's ") + key);
    }
    cmd->add_option_function<std::string>(
        "--time-limit", [&overrides](const std::string& v) { overrides.push_back("time_limit = " + v); },
        "override the config's time_limit");
    cmd->add_option("--jobs", jobs, "parallel runs");
  };
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark matrix and write CSVs");
  add_matrix_flags(bench_cmd);
  bench_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "run a matrix and check every run against the oracle");
  add_matrix_flags(verify_cmd);
  std::string verify_out;
  verify_cmd->add_option("--out", verify_out, "also write CSVs and verify.txt here");

  std::string prim_out;
  double prim_res = 0.1, prim_radius = 0.2;
  auto* prim_cmd = app.add_subcommand("write-primitives", "write the generated 16-heading primitive set");
  prim_cmd->add_option("--out", prim_out, "output file")->required();
  prim_cmd->add_option("--resolution", prim_res, "meters per cell")->capture_default_str();
  prim_cmd->add_option("--min-radius", prim_radius, "minimum turning radius in meters")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tiles_cmd) return solve_tiles(flags, board_text, random_dims, heuristics, weight_max);
    if (*grid_cmd) return solve_grid(flags, map, scenario, primitives);
    if (*prim_cmd) {
      grid::PrimitiveParams p;
      p.resolution = prim_res;
      p.min_turning_radius = prim_radius;
      std::ofstream out(prim_out);
      if (!out) throw std::runtime_error("cannot write " + prim_out);
      grid::write_primitives(out, grid::PrimitiveSet::generate(p));
      return 0;
    }
    if (!algo_list.empty()) overrides.push_back("algorithms = " + algo_list);
    if (jobs > 0) overrides.push_back("jobs = " + std::to_string(jobs));
    const bench::BenchConfig config = load_with_overrides(config_path, overrides);
    bench::MatrixOptions opts;
    if (*bench_cmd) {
      const auto report = bench::run_matrix(config, out_dir, opts);
      for (const auto& a : report.aggregates) {
        std::printf("%-6s success %5.1f%%  t_initial %.4f s  t_final %.4f s  eps %.3f -> %.3f\n", a.algo.c_str(), a.success_rate,
                    a.t_initial, a.t_final, a.eps_initial, a.eps_final);
      }
      for (const auto& r : report.runs) {
        if (!r.row.error.empty()) std::fprintf(stderr, "%s: %s\n", r.run_id.c_str(), r.row.error.c_str());
      }
      std::printf("wrote %s\n", (std::filesystem::path(out_dir) / "summary.csv").string().c_str());
      return 0;
    }
    opts.verify = true;
    opts.write_files = !verify_out.empty();
    const auto report = bench::run_matrix(config, verify_out, opts);
    std::size_t failed = 0;
    for (const auto& r : report.runs) {
      const bool ok = r.row.error.empty() && r.verdict->pass();
      if (!ok) ++failed;
      std::printf("%s %s%s\n", r.run_id.c_str(), r.row.error.empty() ? r.verdict->summary().c_str() : ("error " + r.row.error).c_str(),
                  r.oracle && !r.oracle->solved() ? " (oracle unavailable)" : "");
    }
    std::printf("%zu of %zu runs passed\n", report.runs.size() - failed, report.runs.size());
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
