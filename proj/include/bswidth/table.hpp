#pragma once

// Insertion-ordered hash set for small trivially copyable elements.
//
// Elements live once, in a vector, in insertion order; an open-addressing
// table of (hash tag, index) words finds them. This halves the memory of a
// vector + std::unordered_set pair and avoids a node allocation per element.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bsw {

template <class E, class Hash>
class ElementTable {
 public:
  ElementTable() { slots_.assign(16, 0); }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const E& operator[](std::size_t i) const noexcept { return items_[i]; }
  const std::vector<E>& items() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  void reserve(std::size_t n) {
    items_.reserve(n);
    std::size_t want = 16;
    while (want < 2 * n) want <<= 1;
    if (want > slots_.size()) rehash(want);
  }

  /// Index of x, if present.
  std::optional<std::size_t> find(const E& x) const {
    const std::uint64_t h = Hash{}(x);
    const std::uint64_t tag = h >> 32;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = h & mask;; s = (s + 1) & mask) {
      const std::uint64_t w = slots_[s];
      if (w == 0) return std::nullopt;
      if ((w >> 32) == tag && items_[(w & 0xffffffffu) - 1] == x) return (w & 0xffffffffu) - 1;
    }
  }
  bool contains(const E& x) const { return find(x).has_value(); }
  std::size_t count(const E& x) const { return contains(x) ? 1 : 0; }

  /// Inserts x unless present; returns (index, inserted).
  std::pair<std::size_t, bool> insert(const E& x) {
    if (2 * (items_.size() + 1) > slots_.size()) rehash(slots_.size() * 2);
    const std::uint64_t h = Hash{}(x);
    const std::uint64_t tag = h >> 32;
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = h & mask;
    for (;; s = (s + 1) & mask) {
      const std::uint64_t w = slots_[s];
      if (w == 0) break;
      if ((w >> 32) == tag && items_[(w & 0xffffffffu) - 1] == x) return {(w & 0xffffffffu) - 1, false};
    }
    items_.push_back(x);
    slots_[s] = (tag << 32) | items_.size();
    return {items_.size() - 1, true};
  }

 private:
  void rehash(std::size_t n) {
    std::vector<std::uint64_t> fresh(n, 0);
    const std::size_t mask = n - 1;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const std::uint64_t h = Hash{}(items_[i]);
      std::size_t s = h & mask;
      while (fresh[s] != 0) s = (s + 1) & mask;
      fresh[s] = ((h >> 32) << 32) | (i + 1);
    }
    slots_.swap(fresh);
  }

  std::vector<E> items_;
  std::vector<std::uint64_t> slots_;
};

}  // namespace bsw
