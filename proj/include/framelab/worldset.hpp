#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "framelab/errors.hpp"

namespace framelab {

// Subset of a finite world domain {0, ..., n-1}, stored as a bit vector.
// All set operations require both operands to share the same universe.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(int n) : n_(check_universe(n)), w_(word_count(n), 0) {}

  static WorldSet full(int n) {
    WorldSet s(n);
    for (auto& w : s.w_) w = ~0ULL;
    s.trim();
    return s;
  }

  static WorldSet of(int n, std::initializer_list<int> worlds) {
    WorldSet s(n);
    for (int x : worlds) s.insert(x);
    return s;
  }

  static WorldSet singleton(int n, int x) {
    WorldSet s(n);
    s.insert(x);
    return s;
  }

  int universe() const { return n_; }
  int words() const { return static_cast<int>(w_.size()); }
  std::uint64_t word(int i) const { return w_[static_cast<std::size_t>(i)]; }

  bool contains(int x) const {
    return x >= 0 && x < n_ && (w_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1;
  }

  void insert(int x) {
    check_world(x);
    w_[static_cast<std::size_t>(x) >> 6] |= 1ULL << (x & 63);
  }

  void erase(int x) {
    check_world(x);
    w_[static_cast<std::size_t>(x) >> 6] &= ~(1ULL << (x & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // Least element, or -1 when empty.
  int min_element() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
  }

  bool subset_of(const WorldSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const WorldSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  WorldSet& operator|=(const WorldSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  WorldSet& operator&=(const WorldSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  WorldSet& operator-=(const WorldSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }

  WorldSet complement() const {
    WorldSet s(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  // In-place variants for allocation-free inner loops.
  void clear() {
    for (auto& w : w_) w = 0;
  }

  void invert() {
    for (auto& w : w_) w = ~w;
    trim();
  }

  bool is_full() const {
    if (w_.empty()) return true;
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
      if (w_[i] != ~0ULL) return false;
    std::uint64_t tail = n_ % 64 ? (1ULL << (n_ % 64)) - 1 : ~0ULL;
    return w_.back() == tail;
  }

  bool operator==(const WorldSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::vector<int> elements() const {
    std::vector<int> xs;
    xs.reserve(static_cast<std::size_t>(count()));
    for_each([&](int x) { xs.push_back(x); });
    return xs;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int x) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    });
    return s + "}";
  }

 private:
  static int check_universe(int n) {
    if (n < 0) throw InvalidArgument("world count must be non-negative");
    return n;
  }
  static std::size_t word_count(int n) {
    return (static_cast<std::size_t>(n) + 63) / 64;
  }
  void check_world(int x) const {
    if (x < 0 || x >= n_)
      throw InvalidArgument("world " + std::to_string(x) + " outside domain of size " +
                            std::to_string(n_));
  }
  void check_same(const WorldSet& o) const {
    if (n_ != o.n_) throw InvalidArgument("mismatched world counts in set operation");
  }
  void trim() {
    if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (1ULL << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Orders sets by their sorted element lists; used for canonical layouts.
inline bool lex_less(const WorldSet& a, const WorldSet& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  auto xs = a.elements(), ys = b.elements();
  return xs < ys;
}

struct WorldSetHash {
  std::size_t operator()(const WorldSet& s) const { return s.hash(); }
};

}  // namespace framelab
