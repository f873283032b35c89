#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amha/grid/lattice_domain.hpp"
#include "amha/planner_config.hpp"
#include "amha/tiles/board.hpp"
#include "amha/tiles/heuristics.hpp"

namespace amha::bench {

enum class DomainKind { kTiles, kGrid };

struct RandomMapSpec {
  int width = 20;
  int height = 20;
  int rects = 6;
  int max_side = 4;
};

/// Benchmark matrix description. Text form is line-oriented `key = value`;
/// `#` starts a comment. Repeatable keys: `instance`, `scenario`, `weights`.
/// Per-algorithm overrides use `<algo>.<w1|w2|dw1|dw2>`.
struct BenchConfig {
  DomainKind domain = DomainKind::kTiles;
  std::vector<Mode> algorithms{Mode::kAnytimeMHA};
  double w1 = 1.0;
  double w2 = 1.0;
  double dw1 = 1.0;
  double dw2 = 1.0;
  std::map<Mode, std::map<std::string, double>> overrides;
  std::optional<double> time_limit;  ///< required; 0 = unlimited
  std::uint64_t seed = 1;
  TerminationCheck termination = TerminationCheck::kPerExpansion;
  ClockMode clock = ClockMode::kWall;
  double seconds_per_expansion = 1e-6;
  std::size_t max_states = 0;
  int jobs = 1;
  std::size_t oracle_max_states = 2'000'000;

  // Tiles.
  int heuristics = 3;
  double weight_max = 5.0;
  std::vector<tiles::HeuristicWeights> weights;  ///< explicit draws; else drawn from seed
  std::vector<tiles::TileBoard> boards;

  // Grid.
  std::filesystem::path map;
  std::optional<RandomMapSpec> random_map;
  double resolution = 0.1;
  std::filesystem::path primitives;  ///< empty: generated default
  std::vector<grid::Scenario> scenarios;

  /// Planner settings for one algorithm. ARA* and WA* start at w1 * w2
  /// unless overridden; A* runs at weight 1.
  PlannerConfig planner_config(Mode mode) const;
  /// Explicit weights, or `heuristics` triples drawn from the seed.
  std::vector<tiles::HeuristicWeights> resolved_weights() const;
  std::size_t instance_count() const { return domain == DomainKind::kTiles ? boards.size() : scenarios.size(); }
  /// Throws std::invalid_argument when the matrix cannot run.
  void validate() const;
};

/// Relative paths resolve against `base_dir`. Throws std::invalid_argument
/// with the offending line number on malformed input.
BenchConfig parse_bench_config(std::istream& in, const std::filesystem::path& base_dir = {});
BenchConfig load_bench_config(const std::filesystem::path& path);

/// Config text with every random draw expanded: explicit instances, explicit
/// heuristic weights, absolute paths. Parsing it back yields the same matrix.
std::string write_manifest(const BenchConfig& config);

std::string_view to_string(DomainKind kind);

/// Map (loaded or generated from the seed), footprint and primitives for a
/// grid config.
std::shared_ptr<const grid::GridWorld> load_world(const BenchConfig& config);

}  // namespace amha::bench
