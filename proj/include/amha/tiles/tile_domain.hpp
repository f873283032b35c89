#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "amha/search_domain.hpp"
#include "amha/state_table.hpp"
#include "amha/tiles/board.hpp"
#include "amha/tiles/heuristics.hpp"

namespace amha::tiles {

/// Sliding-tile search domain. Heuristic 0 is MD + LC; heuristic i >= 1 is
/// the weighted MT/MD/LC sum with weights[i - 1]. Boards are packed ten
/// 6-bit cells per word and interned.
class TileDomain : public SearchDomain {
 public:
  TileDomain(const TileBoard& start, std::vector<HeuristicWeights> weights);

  StateId start_state() override { return start_; }
  bool is_goal(StateId s) const override { return features_[s][kMd] == 0; }
  void successors(StateId s, std::vector<Edge>& out) override;
  int num_inadmissible() const override { return static_cast<int>(weights_.size()); }
  double heuristic(StateId s, int index) const override;
  std::size_t num_states() const override { return table_.size(); }

  StateId intern(const TileBoard& board);
  TileBoard board(StateId s) const;

  int manhattan(StateId s) const { return features_[s][kMd]; }
  int conflict(StateId s) const { return features_[s][kLc]; }
  int misplaced(StateId s) const { return features_[s][kMt]; }

  const std::vector<HeuristicWeights>& weights() const { return weights_; }
  int width() const { return width_; }
  int height() const { return height_; }

 private:
  enum Feature { kMd = 0, kLc = 1, kMt = 2 };
  using Features = std::array<std::uint16_t, 3>;

  StateId intern_packed(const std::vector<std::uint8_t>& tiles, const Features& f);
  void unpack(StateId s, std::vector<std::uint8_t>& tiles) const;

  int width_;
  int height_;
  std::vector<HeuristicWeights> weights_;
  PackedStateTable table_;
  std::vector<Features> features_;
  StateId start_;

  std::vector<std::uint8_t> scratch_tiles_;
  std::vector<std::uint64_t> scratch_words_;
};

}  // namespace amha::tiles
