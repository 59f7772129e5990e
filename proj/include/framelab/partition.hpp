#pragma once

#include <optional>
#include <span>
#include <vector>

#include "framelab/frame.hpp"

namespace framelab {

// Partition of {0, ..., n-1} into disjoint nonempty blocks covering the
// domain. Blocks are kept in canonical order (ascending least element),
// so equal partitions compare equal structurally. The empty domain has
// exactly one partition, the one with no blocks.
class Partition {
 public:
  Partition() = default;

  static Partition trivial(int n);   // one block (none when n = 0)
  static Partition discrete(int n);  // singletons
  static Partition from_blocks(int n, std::vector<WorldSet> blocks);

  int universe() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const WorldSet& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  const std::vector<WorldSet>& blocks() const { return blocks_; }
  int block_of(int world) const;

  bool operator==(const Partition& o) const = default;

 private:
  int n_ = 0;
  std::vector<WorldSet> blocks_;
  std::vector<int> block_index_;  // world -> block
};

// Partition whose blocks group worlds with equal membership across the
// given sets (an empty list yields the trivial partition).
Partition induced_partition(int n, std::span<const WorldSet> sets);

// Every block of fine lies inside some block of coarse.
bool refines(const Partition& fine, const Partition& coarse);

// One offending triple of a failed tunedness check: some world of block_u
// has an R-successor in block_v while `element` of block_u has none.
struct TunedFailure {
  int modality = 0;
  int block_u = 0;
  int block_v = 0;
  int element = 0;
};

// A partition is tuned when, per modality and per ordered block pair (U, V)
// including U = V, one edge from U into V forces every world of U to have
// an edge into V.
std::optional<TunedFailure> tuned_failure(const Frame& f, const Partition& v);
bool is_tuned(const Frame& f, const Partition& v);

// Coarsest tuned partition refining v, by iterated splitting on
// block-reachability signatures.
Partition coarsest_tuned_refinement(const Frame& f, const Partition& v);

// Finite family of subsets of a common domain, deduplicated and kept in a
// canonical order.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  SubsetFamily(int n, std::vector<WorldSet> members);

  int universe() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<WorldSet>& members() const { return members_; }
  bool contains(const WorldSet& s) const;

  // Minimal nonempty members.
  std::vector<WorldSet> atoms() const;

  bool operator==(const SubsetFamily& o) const = default;

 private:
  int n_ = 0;
  std::vector<WorldSet> members_;
};

// Least family containing the generators that is closed under complement,
// binary union, and preimage along every relation of f. Always contains
// the empty set and the full domain.
SubsetFamily subalgebra_closure(const Frame& f, std::span<const WorldSet> generators);

// All unions of blocks; the guard keeps 2^blocks enumerable.
SubsetFamily subalgebra_from_partition(const Partition& v, int max_blocks = 20);

// Every partition of {0, ..., n-1}, Bell(n) of them. Throws CapExceeded
// once the budget is spent; keep n small.
std::vector<Partition> all_partitions(int n, long long budget = 2'000'000);

// Largest block count of coarsest_tuned_refinement(f, v) over all
// partitions v with at most 2^k blocks. Enumerates every partition of the
// domain; throws CapExceeded past the budget.
int tunability_profile(const Frame& f, int k, long long budget = 2'000'000);

}  // namespace framelab
