#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace amha::tiles {

/// Direction the blank travels.
enum class Move { kUp, kDown, kLeft, kRight };

/// A sliding-tile board, row-major. 0 is the blank. The goal has the blank
/// at index 0 and tile v at index v.
class TileBoard {
 public:
  static constexpr int kMaxCells = 64;

  /// Throws std::invalid_argument unless `tiles` is a permutation of 0..w*h-1.
  TileBoard(int width, int height, std::vector<std::uint8_t> tiles);

  static TileBoard goal(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  int cells() const { return width_ * height_; }
  std::span<const std::uint8_t> tiles() const { return tiles_; }
  std::uint8_t at(int index) const { return tiles_[static_cast<std::size_t>(index)]; }
  std::uint8_t at(int row, int col) const { return at(row * width_ + col); }
  int blank_index() const { return blank_; }

  bool is_goal() const;
  bool is_solvable() const;

  /// nullopt when the blank would leave the board.
  std::optional<TileBoard> moved(Move m) const;
  std::vector<TileBoard> successors() const;

  /// "w h t0 t1 ..."
  std::string to_string() const;

  friend bool operator==(const TileBoard&, const TileBoard&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> tiles_;
  int blank_;
};

/// Inversions among the non-blank tiles read in row-major order.
std::int64_t inversion_count(std::span<const std::uint8_t> tiles);

/// Solvability relative to the goal: inversion parity for odd widths,
/// inversion + blank-row parity for even widths.
bool is_solvable(std::span<const std::uint8_t> tiles, int width);

/// Uniform permutation, parity-fixed with one transposition of two non-blank
/// tiles when unsolvable. Deterministic in `seed` across platforms.
TileBoard random_solvable_board(int width, int height, std::uint64_t seed);

/// Random walk of `moves` blank moves from the goal (no immediate reversals).
TileBoard scrambled_board(int width, int height, int moves, std::uint64_t seed);

Move inverse(Move m);

}  // namespace amha::tiles
