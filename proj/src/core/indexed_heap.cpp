#include "amha/indexed_heap.hpp"

#include <stdexcept>
#include <utility>

namespace amha {

void IndexedHeap::ensure(StateId s) {
  if (s >= pos_.size()) {
    std::size_t n = pos_.empty() ? 64 : pos_.size();
    while (n <= s) n *= 2;
    pos_.resize(n, -1);
  }
}

void IndexedHeap::place(std::size_t i, const HeapEntry& e) {
  heap_[i] = e;
  pos_[e.state] = static_cast<std::int32_t>(i);
}

void IndexedHeap::sift_up(std::size_t i) {
  HeapEntry moving = heap_[i];
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    if (!precedes(moving, heap_[parent])) break;
    place(i, heap_[parent]);
    i = parent;
  }
  place(i, moving);
}

void IndexedHeap::sift_down(std::size_t i) {
  const std::size_t n = heap_.size();
  HeapEntry moving = heap_[i];
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && precedes(heap_[child + 1], heap_[child])) ++child;
    if (!precedes(heap_[child], moving)) break;
    place(i, heap_[child]);
    i = child;
  }
  place(i, moving);
}

void IndexedHeap::heapify() {
  for (std::size_t i = 0; i < heap_.size(); ++i) pos_[heap_[i].state] = static_cast<std::int32_t>(i);
  for (std::size_t i = heap_.size() / 2; i-- > 0;) sift_down(i);
}

void IndexedHeap::push_or_update(StateId s, double key, Cost g) {
  ensure(s);
  const HeapEntry e{key, g, s};
  if (pos_[s] < 0) {
    heap_.push_back(e);
    pos_[s] = static_cast<std::int32_t>(heap_.size() - 1);
    sift_up(heap_.size() - 1);
    return;
  }
  const std::size_t i = static_cast<std::size_t>(pos_[s]);
  const bool up = precedes(e, heap_[i]);
  heap_[i] = e;
  if (up) {
    sift_up(i);
  } else {
    sift_down(i);
  }
}

void IndexedHeap::remove(StateId s) {
  if (!contains(s)) return;
  const std::size_t i = static_cast<std::size_t>(pos_[s]);
  pos_[s] = -1;
  const HeapEntry last = heap_.back();
  heap_.pop_back();
  if (i == heap_.size()) return;
  heap_[i] = last;
  pos_[last.state] = static_cast<std::int32_t>(i);
  if (i > 0 && precedes(last, heap_[(i - 1) / 2])) {
    sift_up(i);
  } else {
    sift_down(i);
  }
}

StateId IndexedHeap::pop() {
  if (heap_.empty()) throw std::logic_error("pop on empty heap");
  const StateId s = heap_.front().state;
  remove(s);
  return s;
}

void IndexedHeap::clear() {
  for (const auto& e : heap_) pos_[e.state] = -1;
  heap_.clear();
}

void IndexedHeap::assign(std::vector<HeapEntry> entries) {
  clear();
  heap_ = std::move(entries);
  for (const auto& e : heap_) ensure(e.state);
  heapify();
}

bool IndexedHeap::is_valid() const {
  for (std::size_t i = 0; i < heap_.size(); ++i) {
    if (heap_[i].state >= pos_.size() || pos_[heap_[i].state] != static_cast<std::int32_t>(i)) return false;
    if (i > 0 && precedes(heap_[i], heap_[(i - 1) / 2])) return false;
  }
  std::size_t indexed = 0;
  for (auto p : pos_) indexed += p >= 0 ? 1 : 0;
  return indexed == heap_.size();
}

}  // namespace amha
