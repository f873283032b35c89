#include "amha/state_table.hpp"

#include <stdexcept>

namespace amha {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

PackedStateTable::PackedStateTable(std::size_t words_per_state) : stride_(words_per_state), slots_(1024, 0) {
  if (stride_ == 0) throw std::invalid_argument("PackedStateTable: zero-width state");
}

std::uint64_t PackedStateTable::hash(std::span<const std::uint64_t> packed) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : packed) h = mix(h ^ w) + 0x9e3779b97f4a7c15ULL;
  return h;
}

bool PackedStateTable::equals(StateId id, std::span<const std::uint64_t> packed) const {
  const auto stored = get(id);
  for (std::size_t i = 0; i < stride_; ++i) {
    if (stored[i] != packed[i]) return false;
  }
  return true;
}

StateId PackedStateTable::find(std::span<const std::uint64_t> packed) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash(packed) & mask;; i = (i + 1) & mask) {
    const auto slot = slots_[i];
    if (slot == 0) return kNoState;
    if (equals(slot - 1, packed)) return slot - 1;
  }
}

StateId PackedStateTable::intern(std::span<const std::uint64_t> packed) {
  if (packed.size() != stride_) throw std::invalid_argument("PackedStateTable: width mismatch");
  if (2 * (count_ + 1) > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash(packed) & mask;; i = (i + 1) & mask) {
    const auto slot = slots_[i];
    if (slot == 0) {
      if (count_ >= kNoState - 1) throw std::length_error("PackedStateTable: id space exhausted");
      const auto id = static_cast<StateId>(count_++);
      words_.insert(words_.end(), packed.begin(), packed.end());
      slots_[i] = id + 1;
      return id;
    }
    if (equals(slot - 1, packed)) return slot - 1;
  }
}

void PackedStateTable::grow() {
  std::vector<std::uint32_t> old(slots_.size() * 2, 0);
  old.swap(slots_);
  const std::size_t mask = slots_.size() - 1;
  for (auto slot : old) {
    if (slot == 0) continue;
    std::size_t i = hash(get(slot - 1)) & mask;
    while (slots_[i] != 0) i = (i + 1) & mask;
    slots_[i] = slot;
  }
}

}  // namespace amha
