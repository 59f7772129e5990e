#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "framelab/model.hpp"

namespace framelab {

// Worlds of u with no successor inside u, provided u has at least one
// internal edge; empty otherwise.
WorldSet defects(const Relation& r, const WorldSet& u);

// One refinement stage: the partition by all formula extensions over the
// generators collected so far, and the defects its blocks contribute.
struct RefinementStage {
  Partition partition;
  WorldSet defects;
};

// A class that contributed defects, with the data the cluster analysis
// needs: its unique stage, its defect set, the residue (members that are
// defects of later stages), and the maximal clusters of the residue's
// reachability preorder.
struct DefectiveClass {
  WorldSet members;
  int stage = 0;
  WorldSet defect_members;
  WorldSet residue;
  std::vector<WorldSet> maximal_clusters;
};

// Full record of the defect-driven refinement of one frame: stages until
// no class has defects, the accumulated defect set with its stage and
// rank bookkeeping, the even-rank half, the nontrivial cluster family,
// and the separator assembled from cluster picks.
struct QesTrace {
  Frame frame;   // original
  Frame closed;  // designated relation reflexively closed
  int designated = 0;
  std::vector<WorldSet> generators;

  std::vector<RefinementStage> stages;  // stage_count() + 1 entries
  WorldSet defect_union;                // all defects across stages
  std::vector<int> stage_of;            // world -> stage, -1 outside
  std::vector<int> rank_of;             // world -> rank, -1 outside
  WorldSet even_rank;

  std::vector<DefectiveClass> defective_classes;
  std::vector<WorldSet> class_family;    // every class of every stage
  std::vector<WorldSet> cluster_family;  // clusters of size > 1
  std::vector<bool> cluster_minimal;

  WorldSet picks_first, picks_second;    // two least worlds per minimal cluster
  WorldSet nested_first, nested_second;  // picks for non-grounded clusters
  WorldSet separator;                    // picks_first | nested_first

  int stage_count() const { return static_cast<int>(stages.size()) - 1; }
  const Partition& final_partition() const { return stages.back().partition; }
};

// Runs the refinement loop on f with the given designated modality:
// stage partitions live in the closed frame, defects are taken against
// the original relation, and each stage's defect set joins the
// generators of the next. Terminates within world_count() stages.
QesTrace run_qes(const Frame& f, const std::string& designated,
                 std::span<const WorldSet> generators);

// Membership characterization of stage defect sets: a world of a
// defective class V is a stage defect iff its reachability cone within V
// stays inside the defect union and does not straddle the even-rank set
// or the separator. Returns a description of the first violation.
std::optional<std::string> verify_main_claim(const QesTrace& t);

// Every set constructible from the generators over the original frame is
// constructible from generators + defect union + even-rank set +
// separator over the closed frame.
bool verify_embedding(const QesTrace& t);

// The last stage partition has no defective blocks and is tuned in the
// original frame.
bool verify_final_partition(const QesTrace& t);

// Pick pass for a laminar family of clusters that lack a minimal cluster
// below them: processes outermost sets first, picking the two least
// worlds not claimed by an enclosing set. Finite traces never produce
// such clusters; run_qes routes an empty family through here, and the
// mocked-family tests exercise the recursion. Throws when a set has
// fewer than two unclaimed worlds or the family is not laminar.
std::pair<WorldSet, WorldSet> pick_nested_separators(int n,
                                                     std::span<const WorldSet> family);

// Iterates run_qes over every modality, closing one relation per round
// and carrying the produced sets forward as generators; ends with the
// fully reflexive frame and 3 extra generator sets per modality.
struct IteratedQes {
  std::vector<QesTrace> traces;
  Frame final_frame;
  std::vector<WorldSet> final_generators;
  bool embedding_ok = false;
};
IteratedQes run_qes_iterated(const Frame& f, std::span<const WorldSet> generators);

}  // namespace framelab
