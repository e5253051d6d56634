#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cubehull {

// Fixed-width set of vertex ids backed by 64-bit words. The width is the
// vertex count of the owning graph; all set algebra stays within it.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int width) : width_(width), words_(word_count(width), 0) {}

  static VertexSet full(int width) {
    VertexSet s(width);
    for (auto& w : s.words_) w = ~0ull;
    s.trim();
    return s;
  }

  static VertexSet from(int width, const std::vector<int>& vs) {
    VertexSet s(width);
    for (int v : vs) s.set(v);
    return s;
  }

  int width() const { return width_; }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1ull; }
  void set(int v) { words_[v >> 6] |= 1ull << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(1ull << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  // Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }

  // Smallest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= width_) return -1;
    std::size_t i = std::size_t(v) >> 6;
    std::uint64_t w = words_[i] & (~0ull << (v & 63));
    while (true) {
      if (w) return int(i * 64 + __builtin_ctzll(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
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
  VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet complement() const {
    VertexSet s(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool operator==(const VertexSet& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  // Bit string, vertex 0 first.
  std::string bitstring() const {
    std::string s(width_, '0');
    for (int v = first(); v >= 0; v = next(v)) s[v] = '1';
    return s;
  }

  // Sorted-id-sequence lexicographic comparison, e.g. {0,5} < {1,2}.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

  std::size_t hash() const {
    std::size_t h = std::size_t(width_) * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  static std::size_t word_count(int width) {
    return std::size_t(width + 63) / 64;
  }
  void trim() {
    if (words_.empty()) return;
    int r = width_ & 63;
    if (r) words_.back() &= (1ull << r) - 1;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace cubehull
