#include <doctest.h>

#include <random>

#include "framelab/defect.hpp"
#include "framelab/generate.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using framelab::Alphabet;
using framelab::Frame;
using framelab::Partition;
using framelab::QesTrace;
using framelab::Relation;
using framelab::WorldSet;
using testutil::chain;
using testutil::full_frame;
using testutil::uni;

namespace {

QesTrace trace_of(const Frame& f, const std::vector<WorldSet>& gens = {}) {
  return framelab::run_qes(f, "a", gens);
}

std::vector<oracle::IntSet> oracle_gens(const std::vector<WorldSet>& gens) {
  std::vector<oracle::IntSet> out;
  for (const auto& g : gens) out.push_back(oracle::set_of(g));
  return out;
}

}  // namespace

TEST_CASE("defects of a block") {
  Relation r = Relation::from_pairs(2, {{0, 1}});
  CHECK(framelab::defects(r, WorldSet::full(2)) == WorldSet::of(2, {1}));
  CHECK(framelab::defects(r, WorldSet::of(2, {1})) == WorldSet(2));  // no internal edge
  Relation refl = Relation::from_pairs(2, {{0, 0}, {1, 1}});
  CHECK(framelab::defects(refl, WorldSet::full(2)) == WorldSet(2));
}

TEST_CASE("two-chain trace, hand-checked") {
  QesTrace t = trace_of(chain(2));
  CHECK(t.stage_count() == 1);
  REQUIRE(t.stages.size() == 2);
  CHECK(t.stages[0].partition == Partition::trivial(2));
  CHECK(t.stages[0].defects == WorldSet::of(2, {1}));
  CHECK(t.stages[1].partition == Partition::discrete(2));
  CHECK(t.stages[1].defects == WorldSet(2));

  CHECK(t.defect_union == WorldSet::of(2, {1}));
  CHECK(t.stage_of == std::vector<int>{-1, 0});
  CHECK(t.rank_of == std::vector<int>{-1, 0});
  CHECK(t.even_rank == WorldSet::of(2, {1}));
  CHECK(t.cluster_family.empty());
  CHECK(t.separator == WorldSet(2));

  REQUIRE(t.defective_classes.size() == 1);
  CHECK(t.defective_classes[0].members == WorldSet::full(2));
  CHECK(t.defective_classes[0].stage == 0);
  CHECK(t.defective_classes[0].defect_members == WorldSet::of(2, {1}));
  CHECK(t.defective_classes[0].residue == WorldSet(2));

  CHECK(!framelab::verify_main_claim(t).has_value());
  CHECK(framelab::verify_embedding(t));
  CHECK(framelab::verify_final_partition(t));
}

TEST_CASE("reflexive designated relation yields the empty trace") {
  Frame f = uni(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}});
  QesTrace t = trace_of(f);
  CHECK(t.stage_count() == 0);
  CHECK(t.defect_union == WorldSet(3));
  CHECK(t.even_rank == WorldSet(3));
  CHECK(t.separator == WorldSet(3));
  CHECK(t.defective_classes.empty());
  CHECK(!framelab::verify_main_claim(t).has_value());
  CHECK(framelab::verify_embedding(t));
  CHECK(framelab::verify_final_partition(t));
}

TEST_CASE("three-cycle trace matches the definition-level oracle") {
  Frame cyc = uni(3, {{0, 1}, {1, 2}, {2, 0}});
  QesTrace t = trace_of(cyc);
  auto stages = oracle::qes_stages(cyc, 0, {});
  REQUIRE(t.stages.size() == stages.size());
  for (std::size_t i = 0; i < stages.size(); ++i) {
    CHECK(oracle::blocks_of(t.stages[i].partition) == stages[i].blocks);
    CHECK(oracle::set_of(t.stages[i].defects) == stages[i].defects);
  }
  CHECK(!framelab::verify_main_claim(t).has_value());
  CHECK(framelab::verify_embedding(t));
  CHECK(framelab::verify_final_partition(t));
}

TEST_CASE("random traces match the oracle stage for stage") {
  framelab::Rng rng(89);
  Alphabet a({"a"});
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Frame f = framelab::random_frame(rng, a, n, 0.35);
    std::vector<WorldSet> gens;
    if (rng() % 2 == 0) gens.push_back(framelab::random_subset(rng, n));
    QesTrace t = trace_of(f, gens);
    auto stages = oracle::qes_stages(f, 0, oracle_gens(gens));
    REQUIRE(t.stages.size() == stages.size());
    for (std::size_t i = 0; i < stages.size(); ++i) {
      CHECK(oracle::blocks_of(t.stages[i].partition) == stages[i].blocks);
      CHECK(oracle::set_of(t.stages[i].defects) == stages[i].defects);
    }
  }
}

TEST_CASE("trace invariants on a random batch") {
  framelab::Rng rng(97);
  Alphabet a({"a"});
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Frame f = framelab::random_frame(rng, a, n, 0.3);
    std::vector<WorldSet> gens;
    if (rng() % 2 == 0) gens.push_back(framelab::random_subset(rng, n));
    QesTrace t = trace_of(f, gens);

    CHECK(t.stage_count() <= n);
    CHECK(t.stages.back().defects.empty());

    int defect_total = 0;
    for (const auto& stage : t.stages) defect_total += stage.defects.count();
    CHECK(defect_total == t.defect_union.count());  // stage defect sets are disjoint

    for (std::size_t i = 1; i < t.stages.size(); ++i)
      CHECK(framelab::refines(t.stages[i].partition, t.stages[i - 1].partition));

    CHECK(!framelab::verify_main_claim(t).has_value());
    CHECK(framelab::verify_embedding(t));
    CHECK(framelab::verify_final_partition(t));

    // Finite traces never produce clusters without a minimal cluster below.
    CHECK(t.nested_first == WorldSet(n));
    CHECK(t.nested_second == WorldSet(n));

    // Worlds of the defect union carry stage and rank; others carry -1.
    for (int w = 0; w < n; ++w) {
      CHECK((t.stage_of[static_cast<std::size_t>(w)] >= 0) == t.defect_union.contains(w));
      CHECK((t.rank_of[static_cast<std::size_t>(w)] >= 0) == t.defect_union.contains(w));
    }
  }
}

TEST_CASE("detached defect classes stay defect-only and edge-free") {
  framelab::Rng rng(101);
  Alphabet a({"a"});
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Frame f = framelab::random_frame(rng, a, n, 0.3);
    QesTrace t = trace_of(f);
    const Relation& r = f.relation(0);
    for (const auto& cls : t.defective_classes) {
      for (std::size_t m = static_cast<std::size_t>(cls.stage) + 1; m < t.stages.size(); ++m) {
        const Partition& later = t.stages[m].partition;
        for (int w : cls.defect_members.elements()) {
          const WorldSet& block = later.block(later.block_of(w));
          CHECK(block.subset_of(cls.defect_members));
          CHECK(framelab::defects(r, block).empty());
        }
      }
    }
  }
}

TEST_CASE("rank laddering within defective classes") {
  framelab::Rng rng(103);
  Alphabet a({"a"});
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Frame f = framelab::random_frame(rng, a, n, 0.3);
    QesTrace t = trace_of(f);
    const Relation& r = f.relation(0);
    for (const auto& cls : t.defective_classes) {
      int class_rank = n;
      for (int w : cls.defect_members.elements())
        class_rank = std::min(class_rank, t.rank_of[static_cast<std::size_t>(w)]);
      for (int w : (cls.members & t.defect_union).elements()) {
        int rank = t.rank_of[static_cast<std::size_t>(w)];
        CHECK(rank >= class_rank);
        if (rank > class_rank) {
          bool stepped = false;
          for (int b : (cls.members & t.defect_union).elements())
            if (r.contains(w, b) && t.rank_of[static_cast<std::size_t>(b)] == rank - 1)
              stepped = true;
          CHECK(stepped);
        }
      }
    }
  }
}

TEST_CASE("cluster family is laminar and split by the separator") {
  framelab::Rng rng(107);
  Alphabet a({"a"});
  int clusters_seen = 0;
  auto examine = [&](const Frame& f) {
    QesTrace t = trace_of(f);
    for (const auto& c : t.cluster_family) {
      ++clusters_seen;
      CHECK(c.count() > 1);
      CHECK(c.intersects(t.separator));
      CHECK(!c.subset_of(t.separator));
      for (const auto& d : t.cluster_family)
        if (!(c == d))
          CHECK((c.subset_of(d) || d.subset_of(c) || !c.intersects(d)));
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    examine(framelab::random_frame(rng, a, n, 0.45));
  }
  // Small random frames rarely leave a mutual pair inside a residue, so a
  // found-by-search frame guarantees the cluster path is exercised: the
  // 0 <-> 5 cycle survives as a nontrivial cluster and the separator picks
  // its least world.
  Frame found = uni(7, {{0, 5}, {1, 0}, {1, 3}, {1, 4}, {1, 6}, {2, 1}, {2, 2}, {2, 3},
                        {2, 5}, {2, 6}, {3, 2}, {3, 4}, {5, 0}, {5, 4}, {6, 0}, {6, 5}});
  QesTrace witness = trace_of(found);
  REQUIRE(witness.cluster_family.size() == 1);
  CHECK(witness.cluster_family[0] == WorldSet::of(7, {0, 5}));
  CHECK(witness.separator == WorldSet::of(7, {0}));
  examine(found);
  CHECK(clusters_seen > 0);
}

TEST_CASE("separator picks for a mocked laminar family") {
  std::vector<WorldSet> family{WorldSet::of(10, {0, 1, 2, 3, 4, 5}),
                               WorldSet::of(10, {0, 1, 2, 3}),
                               WorldSet::of(10, {6, 7, 8, 9})};
  auto [first, second] = framelab::pick_nested_separators(10, family);
  CHECK(first == WorldSet::of(10, {0, 2, 6}));
  CHECK(second == WorldSet::of(10, {1, 3, 7}));

  std::vector<WorldSet> single{WorldSet::of(4, {1, 3})};
  auto [f1, s1] = framelab::pick_nested_separators(4, single);
  CHECK(f1 == WorldSet::of(4, {1}));
  CHECK(s1 == WorldSet::of(4, {3}));

  std::vector<WorldSet> crossing{WorldSet::of(4, {0, 1, 2}), WorldSet::of(4, {2, 3})};
  CHECK_THROWS_AS(framelab::pick_nested_separators(4, crossing), framelab::InvalidArgument);

  std::vector<WorldSet> cramped{WorldSet::of(3, {0, 1, 2}), WorldSet::of(3, {0, 1})};
  CHECK_THROWS_AS(framelab::pick_nested_separators(3, cramped), framelab::InvalidArgument);

  CHECK(framelab::pick_nested_separators(5, {}).first == WorldSet(5));
}

TEST_CASE("iterated runs close every relation and keep the embedding") {
  framelab::Rng rng(109);
  Alphabet ab({"a", "b"});
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Frame f = framelab::random_frame(rng, ab, n, 0.3);
    std::vector<WorldSet> gens{framelab::random_subset(rng, n)};
    framelab::IteratedQes it = framelab::run_qes_iterated(f, gens);
    REQUIRE(it.traces.size() == 2);
    CHECK(it.final_frame == framelab::reflexive_closure(f));
    CHECK(it.final_generators.size() == 1 + 3 * 2);
    CHECK(it.embedding_ok);
  }
}
