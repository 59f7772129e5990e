#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "framelab/relation.hpp"

namespace framelab {

// Ordered list of distinct modality names.
struct Alphabet {
  std::vector<std::string> names;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> ns);

  int size() const { return static_cast<int>(names.size()); }
  const std::string& name(int d) const { return names[static_cast<std::size_t>(d)]; }
  int index_of(std::string_view name) const;  // -1 when absent
  int require(std::string_view name) const;   // throws when absent
  bool operator==(const Alphabet&) const = default;
};

// Finite frame: a world domain plus one relation per modality.
class Frame {
 public:
  Frame() = default;
  Frame(Alphabet alphabet, int n);
  Frame(Alphabet alphabet, int n, std::vector<Relation> relations);

  const Alphabet& alphabet() const { return alphabet_; }
  int world_count() const { return n_; }
  int modality_count() const { return alphabet_.size(); }

  const Relation& relation(int d) const;
  const Relation& relation(std::string_view name) const;
  Relation& relation_mut(int d);

  bool operator==(const Frame& o) const = default;

 private:
  Alphabet alphabet_;
  int n_ = 0;
  std::vector<Relation> rels_;
};

Frame reflexive_closure(const Frame& f);
Frame irreflexive_part(const Frame& f);

// Union of all of f's relations.
Relation union_relation(const Frame& f);

// Subframe induced by ys, worlds renumbered in increasing order.
struct Restriction {
  Frame frame;
  std::vector<int> index_map;  // old world -> new world, -1 when dropped
};
Restriction restriction(const Frame& f, const WorldSet& ys);

// Clusters of the preorder star(r restricted to ys), listed canonically by
// least element. A cluster is maximal when it reaches no other cluster.
struct Cluster {
  WorldSet members;
  bool maximal = false;
};
std::vector<Cluster> clusters_of(const Relation& r, const WorldSet& ys);

// Mutual-reachability clusters of union_relation(f) plus the strict
// reachability order between them (reflexivity-free pairs).
struct Skeleton {
  std::vector<WorldSet> clusters;            // canonical order by least element
  std::vector<int> cluster_of;               // world -> cluster index
  std::vector<std::pair<int, int>> order;    // (i, j): cluster i reaches j, i != j
};
Skeleton skeleton(const Frame& f);

// Longest chain in the skeleton order, counted in clusters; 0 for the
// empty frame.
int height(const Frame& f);

// Least m with power(r, m+1) a subset of power_le(r, m), r the union
// relation.
int transitivity_degree(const Frame& f);

}  // namespace framelab
