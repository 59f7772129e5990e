#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "framelab/worldset.hpp"

namespace framelab {

// Binary relation on {0, ..., n-1} as an n x n bit matrix, one bit row per
// source world. Composition reads left to right: (a,c) is in compose(r,s)
// iff a r b and b s c for some b.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n);

  static Relation identity(int n);
  static Relation full(int n);
  static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int universe() const { return n_; }

  bool contains(int a, int b) const;
  void insert(int a, int b);
  void erase(int a, int b);

  WorldSet successors(int a) const;
  WorldSet image(const WorldSet& ys) const;     // r[ys]
  WorldSet preimage(const WorldSet& ys) const;  // r^{-1}[ys]

  // preimage without allocating; out must share the universe.
  void preimage_into(const WorldSet& ys, WorldSet& out) const;

  Relation transpose() const;
  bool subset_of(const Relation& o) const;
  bool operator==(const Relation& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  Relation& operator|=(const Relation& o);
  Relation& operator&=(const Relation& o);
  Relation& operator-=(const Relation& o);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
  friend Relation operator-(Relation a, const Relation& b) { return a -= b; }

  Relation reflexive_closure() const;
  Relation irreflexive_part() const;

  // Pairs inside ys x ys only; same universe.
  Relation restricted_to(const WorldSet& ys) const;

  bool is_empty() const;
  int pair_count() const;
  std::vector<std::pair<int, int>> pairs() const;  // row-major order

  friend Relation compose(const Relation& r, const Relation& s);
  friend Relation star(const Relation& r);  // reflexive-transitive closure

 private:
  void check_world(int x) const;
  std::uint64_t* row(int a) { return rows_.data() + static_cast<std::size_t>(a) * words_; }
  const std::uint64_t* row(int a) const {
    return rows_.data() + static_cast<std::size_t>(a) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

Relation compose(const Relation& r, const Relation& s);
Relation star(const Relation& r);

// r composed with itself k times; power(r, 0) is the identity.
Relation power(const Relation& r, int k);

// Union of power(r, i) for 0 <= i <= m.
Relation power_le(const Relation& r, int m);

}  // namespace framelab
