#pragma once

#include <optional>
#include <vector>

#include "framelab/formula.hpp"
#include "framelab/partition.hpp"

namespace framelab {

// Frame plus one extension set per variable p0 .. p(k-1).
struct Model {
  Frame frame;
  std::vector<WorldSet> valuation;

  Model() = default;
  Model(Frame f, std::vector<WorldSet> sets);
  int variable_count() const { return static_cast<int>(valuation.size()); }
};

// Worlds where phi holds; every variable of phi must be interpreted by the
// model.
WorldSet evaluate(const Model& m, const Formula& phi);

struct ValidityResult {
  bool valid = true;
  // On failure, a falsifying valuation (for phi's variables, ascending)
  // and a world where phi fails.
  std::vector<std::pair<int, WorldSet>> witness_valuation;
  int witness_world = -1;
};

// Exhaustive check over all valuations of phi's variables. Requires
// n * (distinct variables) <= cap; throws CapExceeded otherwise.
ValidityResult check_validity(const Frame& f, const Formula& phi, int cap = 22);
bool valid_on_frame(const Frame& f, const Formula& phi, int cap = 22);

// Partition of the model's worlds by the full set of formula extensions
// over the model's variables; computed as the coarsest tuned refinement of
// the valuation-induced partition.
Partition theta_partition(const Model& m);

// Validity of phi on every induced subframe of f, by enumeration of all
// 2^n subsets. Requires n + n * (distinct variables) <= cap.
bool subframe_validity(const Frame& f, const Formula& phi, int cap = 22);

// Diagnostic for bounded reachability under relativization. Builds
// (box^{<=steps} phi)^xi for the frame's first modality, evaluates it at
// world a, and compares with the direct check R_V^*(a) within
// worlds(xi) = V against worlds(phi). Returns whether the two agree.
// Requires a in V and phi modal-free.
bool relativized_box_reach(const Model& m, const Formula& xi, const Formula& phi,
                           int steps, int a);

}  // namespace framelab
