#include "framelab/relation.hpp"

namespace framelab {

namespace {
std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
}

Relation::Relation(int n) {
  if (n < 0) throw InvalidArgument("world count must be non-negative");
  n_ = n;
  words_ = static_cast<int>(words_for(n));
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Relation Relation::identity(int n) {
  Relation r(n);
  for (int a = 0; a < n; ++a) r.insert(a, a);
  return r;
}

Relation Relation::full(int n) {
  Relation r(n);
  for (int a = 0; a < n; ++a) {
    auto* row = r.row(a);
    for (int w = 0; w < r.words_; ++w) row[w] = ~0ULL;
    if (n % 64 != 0) row[r.words_ - 1] &= (1ULL << (n % 64)) - 1;
  }
  return r;
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Relation r(n);
  for (auto [a, b] : pairs) r.insert(a, b);
  return r;
}

void Relation::check_world(int x) const {
  if (x < 0 || x >= n_)
    throw InvalidArgument("world " + std::to_string(x) + " outside domain of size " +
                          std::to_string(n_));
}

bool Relation::contains(int a, int b) const {
  check_world(a);
  check_world(b);
  return (row(a)[b >> 6] >> (b & 63)) & 1;
}

void Relation::insert(int a, int b) {
  check_world(a);
  check_world(b);
  row(a)[b >> 6] |= 1ULL << (b & 63);
}

void Relation::erase(int a, int b) {
  check_world(a);
  check_world(b);
  row(a)[b >> 6] &= ~(1ULL << (b & 63));
}

WorldSet Relation::successors(int a) const {
  check_world(a);
  WorldSet s(n_);
  const auto* r = row(a);
  for (int b = 0; b < n_; ++b)
    if ((r[b >> 6] >> (b & 63)) & 1) s.insert(b);
  return s;
}

WorldSet Relation::image(const WorldSet& ys) const {
  if (ys.universe() != n_) throw InvalidArgument("mismatched world counts in image");
  WorldSet out(n_);
  ys.for_each([&](int a) { out |= successors(a); });
  return out;
}

WorldSet Relation::preimage(const WorldSet& ys) const {
  WorldSet out(n_);
  preimage_into(ys, out);
  return out;
}

void Relation::preimage_into(const WorldSet& ys, WorldSet& out) const {
  if (ys.universe() != n_ || out.universe() != n_)
    throw InvalidArgument("mismatched world counts in preimage");
  out.clear();
  for (int a = 0; a < n_; ++a) {
    const auto* r = row(a);
    for (int w = 0; w < words_; ++w) {
      if (r[w] & ys.word(w)) {
        out.insert(a);
        break;
      }
    }
  }
}

Relation Relation::transpose() const {
  Relation out(n_);
  for (int a = 0; a < n_; ++a) {
    const auto* r = row(a);
    for (int b = 0; b < n_; ++b)
      if ((r[b >> 6] >> (b & 63)) & 1) out.insert(b, a);
  }
  return out;
}

bool Relation::subset_of(const Relation& o) const {
  if (n_ != o.n_) throw InvalidArgument("mismatched world counts in subset test");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] & ~o.rows_[i]) return false;
  return true;
}

Relation& Relation::operator|=(const Relation& o) {
  if (n_ != o.n_) throw InvalidArgument("mismatched world counts in relation union");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= o.rows_[i];
  return *this;
}

Relation& Relation::operator&=(const Relation& o) {
  if (n_ != o.n_) throw InvalidArgument("mismatched world counts in relation meet");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] &= o.rows_[i];
  return *this;
}

Relation& Relation::operator-=(const Relation& o) {
  if (n_ != o.n_) throw InvalidArgument("mismatched world counts in relation difference");
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] &= ~o.rows_[i];
  return *this;
}

Relation Relation::reflexive_closure() const {
  Relation out = *this;
  for (int a = 0; a < n_; ++a) out.insert(a, a);
  return out;
}

Relation Relation::irreflexive_part() const {
  Relation out = *this;
  for (int a = 0; a < n_; ++a) out.erase(a, a);
  return out;
}

Relation Relation::restricted_to(const WorldSet& ys) const {
  if (ys.universe() != n_) throw InvalidArgument("mismatched world counts in restriction");
  Relation out(n_);
  ys.for_each([&](int a) {
    auto* dst = out.row(a);
    const auto* src = row(a);
    for (int w = 0; w < words_; ++w) dst[w] = src[w] & ys.word(w);
  });
  return out;
}

bool Relation::is_empty() const {
  for (auto w : rows_)
    if (w) return false;
  return true;
}

int Relation::pair_count() const {
  int c = 0;
  for (auto w : rows_) c += __builtin_popcountll(w);
  return c;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    const auto* r = row(a);
    for (int b = 0; b < n_; ++b)
      if ((r[b >> 6] >> (b & 63)) & 1) out.emplace_back(a, b);
  }
  return out;
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.n_ != s.n_) throw InvalidArgument("mismatched world counts in composition");
  Relation out(r.n_);
  for (int a = 0; a < r.n_; ++a) {
    const auto* ra = r.row(a);
    auto* oa = out.row(a);
    for (int b = 0; b < r.n_; ++b) {
      if ((ra[b >> 6] >> (b & 63)) & 1) {
        const auto* sb = s.row(b);
        for (int w = 0; w < r.words_; ++w) oa[w] |= sb[w];
      }
    }
  }
  return out;
}

Relation star(const Relation& r) {
  Relation out = r.reflexive_closure();
  for (int k = 0; k < out.n_; ++k) {
    const auto* rk = out.row(k);
    // Row k may alias the row being updated; that only strengthens the pass.
    for (int a = 0; a < out.n_; ++a) {
      if ((out.row(a)[k >> 6] >> (k & 63)) & 1) {
        auto* ra = out.row(a);
        for (int w = 0; w < out.words_; ++w) ra[w] |= rk[w];
      }
    }
  }
  return out;
}

Relation power(const Relation& r, int k) {
  if (k < 0) throw InvalidArgument("relation power must be non-negative");
  Relation out = Relation::identity(r.universe());
  for (int i = 0; i < k; ++i) out = compose(out, r);
  return out;
}

Relation power_le(const Relation& r, int m) {
  if (m < 0) throw InvalidArgument("power bound must be non-negative");
  Relation acc = Relation::identity(r.universe());
  Relation pw = Relation::identity(r.universe());
  for (int i = 1; i <= m; ++i) {
    pw = compose(pw, r);
    acc |= pw;
  }
  return acc;
}

}  // namespace framelab
