#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polywork {

// Fixed-universe dynamic bitset for vertex sets and tight-row sets.
// Two bitsets compare/combine only if they share the same universe size.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : w_) if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

  // Orders by element membership from index 0 upward: the set containing the
  // smaller first differing element wins. Used for reproducible tie-breaking.
  static bool lex_less(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      std::uint64_t da = a.w_[i], db = b.w_[i];
      if (da == db) continue;
      std::uint64_t diff = da ^ db;
      std::uint64_t low = diff & (~diff + 1);
      return (da & low) != 0;
    }
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 1469598103934665603ull;
    for (auto w : w_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }
  static Bitset of(std::size_t n, const std::vector<int>& elems) {
    Bitset b(n);
    for (int e : elems) b.set(static_cast<std::size_t>(e));
    return b;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace polywork

template <>
struct std::hash<polywork::Bitset> {
  std::size_t operator()(const polywork::Bitset& b) const { return b.hash(); }
};
