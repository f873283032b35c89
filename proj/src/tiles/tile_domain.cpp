#include "amha/tiles/tile_domain.hpp"

#include <cstdlib>
#include <stdexcept>

namespace amha::tiles {

namespace {

constexpr int kCellsPerWord = 10;
constexpr int kBitsPerCell = 6;

std::size_t words_for(int cells) { return static_cast<std::size_t>((cells + kCellsPerWord - 1) / kCellsPerWord); }

void pack(const std::vector<std::uint8_t>& tiles, std::vector<std::uint64_t>& words) {
  words.assign(words_for(static_cast<int>(tiles.size())), 0);
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    words[i / kCellsPerWord] |= static_cast<std::uint64_t>(tiles[i]) << (kBitsPerCell * (i % kCellsPerWord));
  }
}

int tile_distance(int value, int index, int width) {
  return std::abs(index / width - value / width) + std::abs(index % width - value % width);
}

}  // namespace

TileDomain::TileDomain(const TileBoard& start, std::vector<HeuristicWeights> weights)
    : width_(start.width()),
      height_(start.height()),
      weights_(std::move(weights)),
      table_(words_for(start.cells())),
      start_(kNoState) {
  if (!start.is_solvable()) throw std::invalid_argument("TileDomain: start board is not solvable");
  start_ = intern(start);
}

StateId TileDomain::intern_packed(const std::vector<std::uint8_t>& tiles, const Features& f) {
  pack(tiles, scratch_words_);
  const std::size_t before = table_.size();
  const StateId id = table_.intern(scratch_words_);
  if (table_.size() != before) features_.push_back(f);
  return id;
}

StateId TileDomain::intern(const TileBoard& board) {
  if (board.width() != width_ || board.height() != height_) throw std::invalid_argument("TileDomain: board shape mismatch");
  const std::vector<std::uint8_t> tiles(board.tiles().begin(), board.tiles().end());
  const Features f{static_cast<std::uint16_t>(manhattan_distance(board)), static_cast<std::uint16_t>(linear_conflict(board)),
                   static_cast<std::uint16_t>(misplaced_tiles(board))};
  return intern_packed(tiles, f);
}

void TileDomain::unpack(StateId s, std::vector<std::uint8_t>& tiles) const {
  const auto words = table_.get(s);
  const auto cells = static_cast<std::size_t>(width_ * height_);
  tiles.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    tiles[i] = static_cast<std::uint8_t>((words[i / kCellsPerWord] >> (kBitsPerCell * (i % kCellsPerWord))) & 0x3f);
  }
}

TileBoard TileDomain::board(StateId s) const {
  std::vector<std::uint8_t> tiles;
  unpack(s, tiles);
  return TileBoard(width_, height_, std::move(tiles));
}

double TileDomain::heuristic(StateId s, int index) const {
  const Features& f = features_[s];
  if (index == 0) return f[kMd] + f[kLc];
  return weighted_heuristic(f[kMt], f[kMd], f[kLc], weights_[static_cast<std::size_t>(index - 1)]);
}

void TileDomain::successors(StateId s, std::vector<Edge>& out) {
  unpack(s, scratch_tiles_);
  auto& tiles = scratch_tiles_;
  int blank = 0;
  while (tiles[static_cast<std::size_t>(blank)] != 0) ++blank;
  const int row = blank / width_;
  const int col = blank % width_;
  const Features parent = features_[s];

  const int targets[4] = {row > 0 ? blank - width_ : -1, row + 1 < height_ ? blank + width_ : -1, col > 0 ? blank - 1 : -1,
                          col + 1 < width_ ? blank + 1 : -1};
  for (int target : targets) {
    if (target < 0) continue;
    const int tile = tiles[static_cast<std::size_t>(target)];
    std::swap(tiles[static_cast<std::size_t>(blank)], tiles[static_cast<std::size_t>(target)]);
    // The moving tile goes from `target` to `blank`; only its terms change.
    Features f = parent;
    f[kMd] = static_cast<std::uint16_t>(f[kMd] - tile_distance(tile, target, width_) + tile_distance(tile, blank, width_));
    f[kMt] = static_cast<std::uint16_t>(f[kMt] - (tile != target ? 1 : 0) + (tile != blank ? 1 : 0));
    f[kLc] = static_cast<std::uint16_t>(linear_conflict(tiles, width_, height_));
    out.push_back({intern_packed(tiles, f), 1});
    std::swap(tiles[static_cast<std::size_t>(blank)], tiles[static_cast<std::size_t>(target)]);
  }
}

}  // namespace amha::tiles
