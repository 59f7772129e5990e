#include "framelab/frame.hpp"

#include <algorithm>
#include <set>

namespace framelab {

Alphabet::Alphabet(std::vector<std::string> ns) : names(std::move(ns)) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidArgument("modality names must be non-empty");
    if (!seen.insert(n).second)
      throw InvalidArgument("duplicate modality name '" + n + "'");
  }
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int Alphabet::require(std::string_view name) const {
  int d = index_of(name);
  if (d < 0) throw InvalidArgument("unknown modality '" + std::string(name) + "'");
  return d;
}

Frame::Frame(Alphabet alphabet, int n)
    : alphabet_(std::move(alphabet)), n_(n) {
  if (n < 0) throw InvalidArgument("world count must be non-negative");
  rels_.assign(static_cast<std::size_t>(alphabet_.size()), Relation(n));
}

Frame::Frame(Alphabet alphabet, int n, std::vector<Relation> relations)
    : alphabet_(std::move(alphabet)), n_(n), rels_(std::move(relations)) {
  if (n < 0) throw InvalidArgument("world count must be non-negative");
  if (static_cast<int>(rels_.size()) != alphabet_.size())
    throw InvalidArgument("one relation required per modality");
  for (const auto& r : rels_)
    if (r.universe() != n_) throw InvalidArgument("relation domain differs from frame domain");
}

const Relation& Frame::relation(int d) const {
  if (d < 0 || d >= modality_count()) throw InvalidArgument("modality index out of range");
  return rels_[static_cast<std::size_t>(d)];
}

const Relation& Frame::relation(std::string_view name) const {
  return relation(alphabet_.require(name));
}

Relation& Frame::relation_mut(int d) {
  if (d < 0 || d >= modality_count()) throw InvalidArgument("modality index out of range");
  return rels_[static_cast<std::size_t>(d)];
}

Frame reflexive_closure(const Frame& f) {
  Frame out = f;
  for (int d = 0; d < f.modality_count(); ++d)
    out.relation_mut(d) = f.relation(d).reflexive_closure();
  return out;
}

Frame irreflexive_part(const Frame& f) {
  Frame out = f;
  for (int d = 0; d < f.modality_count(); ++d)
    out.relation_mut(d) = f.relation(d).irreflexive_part();
  return out;
}

Relation union_relation(const Frame& f) {
  Relation r(f.world_count());
  for (int d = 0; d < f.modality_count(); ++d) r |= f.relation(d);
  return r;
}

Restriction restriction(const Frame& f, const WorldSet& ys) {
  if (ys.universe() != f.world_count())
    throw InvalidArgument("restriction set must live in the frame's domain");
  std::vector<int> index_map(static_cast<std::size_t>(f.world_count()), -1);
  std::vector<int> kept = ys.elements();
  for (std::size_t i = 0; i < kept.size(); ++i) index_map[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);

  Frame out(f.alphabet(), static_cast<int>(kept.size()));
  for (int d = 0; d < f.modality_count(); ++d) {
    const Relation& r = f.relation(d);
    Relation& o = out.relation_mut(d);
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (r.contains(kept[i], kept[j])) o.insert(static_cast<int>(i), static_cast<int>(j));
  }
  return {std::move(out), std::move(index_map)};
}

std::vector<Cluster> clusters_of(const Relation& r, const WorldSet& ys) {
  if (ys.universe() != r.universe())
    throw InvalidArgument("cluster domain must live in the relation's domain");
  Relation reach = star(r.restricted_to(ys));
  std::vector<Cluster> out;
  WorldSet seen(ys.universe());
  ys.for_each([&](int a) {
    if (seen.contains(a)) return;
    WorldSet members(ys.universe());
    ys.for_each([&](int b) {
      if (reach.contains(a, b) && reach.contains(b, a)) members.insert(b);
    });
    seen |= members;
    out.push_back({members, false});
  });
  for (auto& c : out) {
    int rep = c.members.min_element();
    bool maximal = true;
    ys.for_each([&](int b) {
      if (!c.members.contains(b) && reach.contains(rep, b)) maximal = false;
    });
    c.maximal = maximal;
  }
  return out;
}

Skeleton skeleton(const Frame& f) {
  int n = f.world_count();
  Relation reach = star(union_relation(f));
  Skeleton sk;
  sk.cluster_of.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (sk.cluster_of[static_cast<std::size_t>(a)] >= 0) continue;
    WorldSet members(n);
    for (int b = 0; b < n; ++b)
      if (reach.contains(a, b) && reach.contains(b, a)) members.insert(b);
    int idx = static_cast<int>(sk.clusters.size());
    members.for_each([&](int b) { sk.cluster_of[static_cast<std::size_t>(b)] = idx; });
    sk.clusters.push_back(members);
  }
  for (std::size_t i = 0; i < sk.clusters.size(); ++i) {
    for (std::size_t j = 0; j < sk.clusters.size(); ++j) {
      if (i == j) continue;
      int a = sk.clusters[i].min_element();
      int b = sk.clusters[j].min_element();
      if (reach.contains(a, b))
        sk.order.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return sk;
}

int height(const Frame& f) {
  Skeleton sk = skeleton(f);
  std::size_t m = sk.clusters.size();
  // The strict order is transitive and acyclic, so iterating relaxation to
  // fixpoint is cheap at these sizes.
  bool changed = true;
  std::vector<int> chain(m, 1);
  while (changed) {
    changed = false;
    for (auto [i, j] : sk.order) {
      int via = chain[static_cast<std::size_t>(i)] + 1;
      if (via > chain[static_cast<std::size_t>(j)]) {
        chain[static_cast<std::size_t>(j)] = via;
        changed = true;
      }
    }
  }
  int h = 0;
  for (int c : chain) h = std::max(h, c);
  return m == 0 ? 0 : h;
}

int transitivity_degree(const Frame& f) {
  Relation r = union_relation(f);
  Relation le = Relation::identity(f.world_count());
  Relation pw = r;
  for (int m = 0;; ++m) {
    if (pw.subset_of(le)) return m;
    le |= pw;
    pw = compose(pw, r);
  }
}

}  // namespace framelab
