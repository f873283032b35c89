#include "amha/tiles/board.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "amha/random.hpp"

namespace amha::tiles {

TileBoard::TileBoard(int width, int height, std::vector<std::uint8_t> tiles)
    : width_(width), height_(height), tiles_(std::move(tiles)), blank_(-1) {
  if (width < 2 || height < 2) throw std::invalid_argument("TileBoard: width and height must be >= 2");
  if (width * height > kMaxCells) throw std::invalid_argument("TileBoard: at most 64 cells");
  if (tiles_.size() != static_cast<std::size_t>(width * height)) throw std::invalid_argument("TileBoard: tile count mismatch");
  std::vector<bool> seen(tiles_.size(), false);
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    const auto v = tiles_[i];
    if (v >= tiles_.size() || seen[v]) throw std::invalid_argument("TileBoard: tiles are not a permutation");
    seen[v] = true;
    if (v == 0) blank_ = static_cast<int>(i);
  }
}

TileBoard TileBoard::goal(int width, int height) {
  std::vector<std::uint8_t> tiles(static_cast<std::size_t>(width * height));
  std::iota(tiles.begin(), tiles.end(), std::uint8_t{0});
  return TileBoard(width, height, std::move(tiles));
}

bool TileBoard::is_goal() const {
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    if (tiles_[i] != i) return false;
  }
  return true;
}

bool TileBoard::is_solvable() const { return tiles::is_solvable(tiles_, width_); }

std::optional<TileBoard> TileBoard::moved(Move m) const {
  const int row = blank_ / width_;
  const int col = blank_ % width_;
  int target = -1;
  switch (m) {
    case Move::kUp: target = row > 0 ? blank_ - width_ : -1; break;
    case Move::kDown: target = row + 1 < height_ ? blank_ + width_ : -1; break;
    case Move::kLeft: target = col > 0 ? blank_ - 1 : -1; break;
    case Move::kRight: target = col + 1 < width_ ? blank_ + 1 : -1; break;
  }
  if (target < 0) return std::nullopt;
  TileBoard next = *this;
  std::swap(next.tiles_[static_cast<std::size_t>(blank_)], next.tiles_[static_cast<std::size_t>(target)]);
  next.blank_ = target;
  return next;
}

std::vector<TileBoard> TileBoard::successors() const {
  std::vector<TileBoard> out;
  for (Move m : {Move::kUp, Move::kDown, Move::kLeft, Move::kRight}) {
    if (auto b = moved(m)) out.push_back(std::move(*b));
  }
  return out;
}

std::string TileBoard::to_string() const {
  std::ostringstream os;
  os << width_ << ' ' << height_;
  for (auto v : tiles_) os << ' ' << static_cast<int>(v);
  return os.str();
}

Move inverse(Move m) {
  switch (m) {
    case Move::kUp: return Move::kDown;
    case Move::kDown: return Move::kUp;
    case Move::kLeft: return Move::kRight;
    case Move::kRight: return Move::kLeft;
  }
  return m;
}

std::int64_t inversion_count(std::span<const std::uint8_t> tiles) {
  std::int64_t inversions = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i] == 0) continue;
    for (std::size_t j = i + 1; j < tiles.size(); ++j) {
      if (tiles[j] != 0 && tiles[j] < tiles[i]) ++inversions;
    }
  }
  return inversions;
}

bool is_solvable(std::span<const std::uint8_t> tiles, int width) {
  const std::int64_t inversions = inversion_count(tiles);
  if (width % 2 == 1) return inversions % 2 == 0;
  const auto blank = std::find(tiles.begin(), tiles.end(), std::uint8_t{0}) - tiles.begin();
  const auto blank_row = blank / width;
  return (inversions + blank_row) % 2 == 0;
}

TileBoard random_solvable_board(int width, int height, std::uint64_t seed) {
  if (width * height < 4) throw std::invalid_argument("random_solvable_board: need at least 4 cells");
  Rng rng(seed);
  std::vector<std::uint8_t> tiles(static_cast<std::size_t>(width * height));
  std::iota(tiles.begin(), tiles.end(), std::uint8_t{0});
  for (std::size_t i = tiles.size() - 1; i > 0; --i) {
    std::swap(tiles[i], tiles[uniform_index(rng, i + 1)]);
  }
  if (!is_solvable(tiles, width)) {
    // Swapping two non-blank tiles flips the inversion parity.
    std::size_t a = 0;
    while (tiles[a] == 0) ++a;
    std::size_t b = a + 1;
    while (tiles[b] == 0) ++b;
    std::swap(tiles[a], tiles[b]);
  }
  return TileBoard(width, height, std::move(tiles));
}

TileBoard scrambled_board(int width, int height, int moves, std::uint64_t seed) {
  Rng rng(seed);
  TileBoard board = TileBoard::goal(width, height);
  std::optional<Move> last;
  constexpr Move kMoves[] = {Move::kUp, Move::kDown, Move::kLeft, Move::kRight};
  for (int k = 0; k < moves; ++k) {
    for (;;) {
      const Move m = kMoves[uniform_index(rng, 4)];
      if (last && m == inverse(*last)) continue;
      if (auto next = board.moved(m)) {
        board = std::move(*next);
        last = m;
        break;
      }
    }
  }
  return board;
}

}  // namespace amha::tiles
