#pragma once

// Reference implementations used to cross-check the library. Everything
// here favors the most literal reading of a definition over speed:
// relations are plain pair sets, families are set-of-set containers, and
// closures loop until nothing changes. None of it shares algorithms with
// the library code under test.

#include <set>
#include <utility>
#include <vector>

#include "framelab/defect.hpp"
#include "framelab/formula.hpp"
#include "framelab/frame.hpp"
#include "framelab/model.hpp"
#include "framelab/partition.hpp"

namespace oracle {

using PairSet = std::set<std::pair<int, int>>;
using IntSet = std::set<int>;
using Family = std::set<IntSet>;
using Blocks = std::vector<IntSet>;

PairSet pairs_of(const framelab::Relation& r);
IntSet set_of(const framelab::WorldSet& s);
framelab::WorldSet worldset_of(const IntSet& s, int n);
Blocks blocks_of(const framelab::Partition& p);

PairSet compose(const PairSet& r, const PairSet& s);
PairSet power(const PairSet& r, int k, int n);
PairSet star(const PairSet& r, int n);
PairSet restrict_pairs(const PairSet& r, const IntSet& v);

// Every partition of {0..n-1}, blocks sorted by least element.
std::vector<Blocks> all_partitions(int n);

bool is_tuned(const framelab::Frame& f, const Blocks& blocks);
bool refines(const Blocks& fine, const Blocks& coarse);

// Coarsest tuned refinement found by filtering the full partition lattice.
Blocks coarsest_tuned(const framelab::Frame& f, const Blocks& seed);

// Recursive truth-set evaluation over plain sets.
IntSet eval(const framelab::Frame& f, const std::vector<IntSet>& valuation,
            const framelab::Formula& phi);

// Exhaustive validity: every assignment of the occurring variables.
bool valid(const framelab::Frame& f, const framelab::Formula& phi);

// Validity of phi on every subset restriction of f.
bool subframe_valid(const framelab::Frame& f, const framelab::Formula& phi);

// Closure of the generators under complement, intersection, and modal
// preimage, by fixpoint iteration over a set family.
Family subalgebra(const framelab::Frame& f, const std::vector<IntSet>& generators);

// Partition by formula extensions: boolean closure at each modal depth,
// diamonds lift one depth, stopping at depth n (world count).
Blocks theta_partition(const framelab::Frame& f, const std::vector<IntSet>& valuation);

struct QesStage {
  Blocks blocks;
  IntSet defects;
};

// The defect-driven stage loop, straight from the definition: partitions
// live in the frame with the designated relation reflexively closed,
// defects are taken against the original relation, and each stage's
// defect set joins the generators of the next.
std::vector<QesStage> qes_stages(const framelab::Frame& f, int designated,
                                 const std::vector<IntSet>& generators);

int height(const framelab::Frame& f);
int degree(const framelab::Frame& f);

}  // namespace oracle
