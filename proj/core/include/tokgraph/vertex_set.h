#ifndef TOKGRAPH_VERTEX_SET_H_
#define TOKGRAPH_VERTEX_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tokgraph {

// Fixed-capacity bit set over vertex indices [0, capacity). Used for
// adjacency rows and for the candidate/dominated sets inside the solvers.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet Full(int capacity) {
    VertexSet s(capacity);
    for (int v = 0; v < capacity; ++v) s.insert(v);
    return s;
  }

  int capacity() const { return capacity_; }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }
  // Smallest member greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= capacity_) return -1;
    std::size_t i = v >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Removes every member of o.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tokgraph

#endif  // TOKGRAPH_VERTEX_SET_H_
