#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include "imlab/graph.hpp"

namespace imlab {

// Fixed-capacity bitset over W 64-bit words; the search engines are
// instantiated for the smallest W that covers the host.
template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static constexpr int capacity = 64 * W;

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1U; }

  bool any() const {
    for (auto x : w) {
      if (x) return true;
    }
    return false;
  }
  bool none() const { return !any(); }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  // Index of the lowest set bit, or -1.
  int first() const {
    for (int i = 0; i < W; ++i) {
      if (w[i]) return 64 * i + std::countr_zero(w[i]);
    }
    return -1;
  }
  // Lowest set bit strictly above `i`, or -1.
  int next(int i) const {
    ++i;
    if (i >= capacity) return -1;
    int word = i >> 6;
    std::uint64_t cur = w[word] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return 64 * word + std::countr_zero(cur);
      if (++word >= W) return -1;
      cur = w[word];
    }
  }
  bool intersects(const Bits& o) const {
    for (int i = 0; i < W; ++i) {
      if (w[i] & o.w[i]) return true;
    }
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (int i = 0; i < W; ++i) {
      if (w[i] & ~o.w[i]) return false;
    }
    return true;
  }
  // Keeps only bits strictly above `i`.
  void keep_above(int i) {
    for (int k = 0; k < W; ++k) {
      const int lo = 64 * k;
      if (lo + 63 <= i) {
        w[k] = 0;
      } else if (lo <= i) {
        w[k] &= ~std::uint64_t{0} << (i - lo + 1);
      }
    }
  }
  // Keeps only bits strictly below `i`.
  void keep_below(int i) {
    for (int k = 0; k < W; ++k) {
      const int lo = 64 * k;
      if (lo >= i) {
        w[k] = 0;
      } else if (lo + 64 > i) {
        w[k] &= (std::uint64_t{1} << (i - lo)) - 1;
      }
    }
  }

  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (int i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (int i = 0; i < W; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits minus(Bits a, const Bits& b) { return a.and_not(b); }
  friend bool operator==(const Bits& a, const Bits& b) { return a.w == b.w; }

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(64 * i + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  static Bits prefix(int n) {
    Bits b;
    for (int i = 0; i < W; ++i) {
      const int lo = 64 * i;
      if (n >= lo + 64) {
        b.w[i] = ~std::uint64_t{0};
      } else if (n > lo) {
        b.w[i] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return b;
  }
};

template <int W>
std::vector<Bits<W>> neighbor_bits(const Graph& g) {
  std::vector<Bits<W>> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = g.row(v);
    for (std::size_t i = 0; i < row.size() && i < static_cast<std::size_t>(W); ++i) out[v].w[i] = row[i];
  }
  return out;
}

// Calls f.template operator()<W>() for the smallest supported W >= words.
// Returns false when the graph is too large for any instantiation.
template <class F>
auto dispatch_width(std::size_t words, F&& f) {
  if (words <= 1) return f.template operator()<1>();
  if (words <= 2) return f.template operator()<2>();
  if (words <= 4) return f.template operator()<4>();
  if (words <= 8) return f.template operator()<8>();
  if (words <= 16) return f.template operator()<16>();
  return f.template operator()<64>();
}

}  // namespace imlab
