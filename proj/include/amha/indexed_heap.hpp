#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amha/types.hpp"

namespace amha {

struct HeapEntry {
  double key;
  Cost g;
  StateId state;
};

/// Equal keys go to the larger g (deeper node), then the smaller id.
inline bool precedes(const HeapEntry& a, const HeapEntry& b) {
  if (a.key != b.key) return a.key < b.key;
  if (a.g != b.g) return a.g > b.g;
  return a.state < b.state;
}

/// Binary min-heap addressed by StateId. Positions are tracked per state so
/// decrease-key, increase-key and arbitrary removal run in O(log n).
class IndexedHeap {
 public:
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  /// +inf on an empty heap.
  double min_key() const { return heap_.empty() ? kInfinity : heap_.front().key; }
  const HeapEntry& top() const { return heap_.front(); }

  bool contains(StateId s) const {
    return s < pos_.size() && pos_[s] >= 0;
  }
  const HeapEntry& entry(StateId s) const { return heap_[pos_[s]]; }

  /// Inserts `s` or moves it to its new priority.
  void push_or_update(StateId s, double key, Cost g);
  void remove(StateId s);
  StateId pop();
  void clear();

  /// Replaces the contents wholesale and heapifies in O(n).
  void assign(std::vector<HeapEntry> entries);

  /// Lets `rekey(entry)` rewrite each entry's key and g in place, then heapifies.
  template <class F>
  void rekey_all(F&& rekey) {
    for (auto& e : heap_) rekey(e);
    heapify();
  }

  std::span<const HeapEntry> entries() const { return heap_; }

  /// Checks the heap order and the position index; used by tests.
  bool is_valid() const;

 private:
  void place(std::size_t i, const HeapEntry& e);
  void sift_up(std::size_t i);
  void sift_down(std::size_t i);
  void heapify();
  void ensure(StateId s);

  std::vector<HeapEntry> heap_;
  std::vector<std::int32_t> pos_;
};

}  // namespace amha
