#include "amha/tiles/heuristics.hpp"

#include <algorithm>
#include <cstdlib>

#include "amha/random.hpp"

namespace amha::tiles {

namespace {

// Longest strictly increasing subsequence; lines hold at most 8 values.
int longest_increasing(const std::uint8_t* values, int n) {
  int tails[TileBoard::kMaxCells];
  int len = 0;
  for (int i = 0; i < n; ++i) {
    const int v = values[i];
    const int pos = static_cast<int>(std::lower_bound(tails, tails + len, v) - tails);
    tails[pos] = v;
    if (pos == len) ++len;
  }
  return len;
}

}  // namespace

int manhattan_distance(std::span<const std::uint8_t> tiles, int width) {
  int sum = 0;
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i) {
    const int v = tiles[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    sum += std::abs(i / width - v / width) + std::abs(i % width - v % width);
  }
  return sum;
}

int manhattan_distance(const TileBoard& board) { return manhattan_distance(board.tiles(), board.width()); }

int linear_conflict(std::span<const std::uint8_t> tiles, int width, int height) {
  std::uint8_t line[TileBoard::kMaxCells];
  int removals = 0;
  for (int r = 0; r < height; ++r) {
    int n = 0;
    for (int c = 0; c < width; ++c) {
      const int v = tiles[static_cast<std::size_t>(r * width + c)];
      if (v != 0 && v / width == r) line[n++] = static_cast<std::uint8_t>(v % width);
    }
    removals += n - longest_increasing(line, n);
  }
  for (int c = 0; c < width; ++c) {
    int n = 0;
    for (int r = 0; r < height; ++r) {
      const int v = tiles[static_cast<std::size_t>(r * width + c)];
      if (v != 0 && v % width == c) line[n++] = static_cast<std::uint8_t>(v / width);
    }
    removals += n - longest_increasing(line, n);
  }
  return 2 * removals;
}

int linear_conflict(const TileBoard& board) { return linear_conflict(board.tiles(), board.width(), board.height()); }

int misplaced_tiles(std::span<const std::uint8_t> tiles) {
  int count = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i] != 0 && tiles[i] != i) ++count;
  }
  return count;
}

int misplaced_tiles(const TileBoard& board) { return misplaced_tiles(board.tiles()); }

double weighted_heuristic(const TileBoard& board, const HeuristicWeights& w) {
  return weighted_heuristic(misplaced_tiles(board), manhattan_distance(board), linear_conflict(board), w);
}

std::vector<HeuristicWeights> draw_weights(int count, std::uint64_t seed, double max_weight) {
  Rng rng(seed);
  std::vector<HeuristicWeights> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    HeuristicWeights w;
    w.misplaced = max_weight * uniform_unit(rng);
    w.manhattan = max_weight * uniform_unit(rng);
    w.conflict = max_weight * uniform_unit(rng);
    out.push_back(w);
  }
  return out;
}

}  // namespace amha::tiles
