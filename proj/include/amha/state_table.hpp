#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amha/types.hpp"

namespace amha {

/// Interns fixed-width packed states (a run of 64-bit words each) and maps
/// them to dense StateIds in insertion order. Open addressing with linear
/// probing over a power-of-two slot array.
class PackedStateTable {
 public:
  explicit PackedStateTable(std::size_t words_per_state);

  std::size_t words_per_state() const { return stride_; }
  std::size_t size() const { return count_; }

  /// Returns the id of `packed`, interning it if unseen.
  StateId intern(std::span<const std::uint64_t> packed);

  /// kNoState if absent.
  StateId find(std::span<const std::uint64_t> packed) const;

  std::span<const std::uint64_t> get(StateId id) const {
    return {words_.data() + static_cast<std::size_t>(id) * stride_, stride_};
  }

 private:
  std::uint64_t hash(std::span<const std::uint64_t> packed) const;
  bool equals(StateId id, std::span<const std::uint64_t> packed) const;
  void grow();

  std::size_t stride_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> slots_;  // id + 1, 0 = empty
};

}  // namespace amha
