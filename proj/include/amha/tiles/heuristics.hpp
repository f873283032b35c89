#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amha/tiles/board.hpp"

namespace amha::tiles {

int manhattan_distance(const TileBoard& board);
int manhattan_distance(std::span<const std::uint8_t> tiles, int width);

/// Twice the per-line minimum number of tiles to pull out of their goal
/// row/column so the rest are in goal order (cells minus the longest
/// increasing run), summed over rows and columns. MD + LC stays admissible.
int linear_conflict(const TileBoard& board);
int linear_conflict(std::span<const std::uint8_t> tiles, int width, int height);

/// Non-blank tiles off their goal cell.
int misplaced_tiles(const TileBoard& board);
int misplaced_tiles(std::span<const std::uint8_t> tiles);

struct HeuristicWeights {
  double misplaced = 0.0;
  double manhattan = 0.0;
  double conflict = 0.0;
};

inline double weighted_heuristic(int mt, int md, int lc, const HeuristicWeights& w) {
  return w.misplaced * mt + w.manhattan * md + w.conflict * lc;
}
double weighted_heuristic(const TileBoard& board, const HeuristicWeights& w);

/// `count` weight triples drawn uniformly from [0, max_weight].
std::vector<HeuristicWeights> draw_weights(int count, std::uint64_t seed, double max_weight = 5.0);

}  // namespace amha::tiles
