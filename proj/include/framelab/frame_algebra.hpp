#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "framelab/partition.hpp"

namespace framelab {

// Frame assembled from indexed summands. Worlds of summand i occupy the
// contiguous range [layout[i].first, layout[i].first + layout[i].second);
// summands may be empty.
struct SumFrame {
  Frame frame;
  std::vector<int> index_of;                 // world -> summand
  std::vector<int> inner_of;                 // world -> world within summand
  std::vector<std::pair<int, int>> layout;   // summand -> (offset, size)

  int summand_count() const { return static_cast<int>(layout.size()); }
  int world_at(int index, int inner) const {
    return layout[static_cast<std::size_t>(index)].first + inner;
  }
};

// Summands side by side with no edges between them. All summands must
// share one alphabet.
SumFrame disjoint_sum(std::span<const Frame> summands);

// Sum over an index frame: within summand i the summand's own edges;
// between distinct summands i and j, all edges (one per world pair) per
// modality whenever the index relation has (i, j). Index loops (i, i)
// contribute nothing, so the result is invariant under reflexive closure
// of the index. The index and the summands must share one alphabet, and
// the index must have one world per summand.
SumFrame sum_over_index(const Frame& index, std::span<const Frame> summands);

// Lexicographic sum: the index frame carries the vertical alphabet, the
// summands carry the horizontal one (the two must be disjoint). The
// result's alphabet lists the vertical names first. Vertical edges ignore
// the inner worlds entirely, so index loops do act here.
SumFrame lex_sum(const Frame& index, std::span<const Frame> summands);

// Encodes a lexicographic sum as sum_over_index: the index is widened to
// the combined alphabet with empty horizontal relations, and each summand
// is widened with vertical relations that are all of X_i x X_i when the
// index loops at i and empty otherwise. Produces the same frame as
// lex_sum pointwise.
SumFrame lex_as_sum(const Frame& index, std::span<const Frame> summands);

// Index worlds grouped by which v-blocks their summand meets.
Partition footprint_partition(const SumFrame& s, const Partition& v);

// Partition transfer onto a sum. Preconditions: v is tuned in the
// disjoint sum of the summands, u is tuned in irreflexive_part(index), and
// u refines the partition of index worlds by their v-block footprint
// (which v-blocks meet the summand). The intersection partition
// (same v-block and same u-block) is then tuned in the sum itself.
Partition transfer_partition(const SumFrame& s, const Frame& index, const Partition& v,
                             const Partition& u);

// Map of worlds between two frames over the same modality names.
struct WorldMap {
  Frame domain;
  Frame codomain;
  std::vector<int> map;  // domain world -> codomain world
};

struct PmorphismFailure {
  std::string detail;
};

// Checks the two p-morphism halves: edges map forward to edges, and every
// edge from an image lifts to an edge in the domain ending in a preimage.
std::optional<PmorphismFailure> pmorphism_failure(const WorldMap& m);
bool is_pmorphism(const WorldMap& m);

struct PhiConditionFailure {
  std::string vertical;
  std::string horizontal;
  int condition = 0;  // 1: h;v <= v   2: v;h <= v   3: h^-1;v <= v
  std::pair<int, int> pair{0, 0};
};

// Frame-side counterpart of phi_axioms: for every vertical v and
// horizontal h, compose(R_h, R_v), compose(R_v, R_h) and
// compose(transpose(R_h), R_v) must all be contained in R_v.
std::optional<PhiConditionFailure> phi_condition_failure(const Frame& f,
                                                         const Alphabet& vertical,
                                                         const Alphabet& horizontal);
bool phi_conditions(const Frame& f, const Alphabet& vertical, const Alphabet& horizontal);

// star(V | H) == compose(star(V), star(H)) with V and H the unions of the
// vertical and horizontal relations. Holds whenever phi_conditions does.
bool composition_splits(const Frame& f, const Alphabet& vertical, const Alphabet& horizontal);

// Least world from which star(V | H) reaches every world, if any.
std::optional<int> find_root(const Frame& f);

// Cover of a rooted frame satisfying the interaction conditions: the
// index is the vertical cone at the root, each summand the horizontal
// cone at its index world, and the cover is their lexicographic sum. The
// map sends (i, a) to a and is a surjective p-morphism onto f.
struct CoverResult {
  SumFrame cover;
  std::vector<int> map;  // cover world -> world of f
  bool pmorphism = false;
  bool surjective = false;
  bool composition_identity = false;
};
CoverResult oplus_cover(const Frame& f, const Alphabet& vertical, const Alphabet& horizontal,
                        int root);

}  // namespace framelab
