#include <doctest.h>

#include <random>

#include "framelab/frame_algebra.hpp"
#include "framelab/generate.hpp"
#include "framelab/model.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using framelab::Alphabet;
using framelab::Frame;
using framelab::Partition;
using framelab::Relation;
using framelab::SumFrame;
using framelab::WorldMap;
using framelab::WorldSet;
using testutil::chain;
using testutil::full_frame;
using testutil::uni;

namespace {

Frame cluster2() { return full_frame(2); }

}  // namespace

TEST_CASE("disjoint sum lays frames side by side") {
  Frame point(Alphabet({"a"}), 1);
  std::vector<Frame> two{point, point};
  SumFrame s = framelab::disjoint_sum(two);
  CHECK(s.frame.world_count() == 2);
  CHECK(s.frame.relation(0).is_empty());
  CHECK(s.index_of == std::vector<int>{0, 1});
  CHECK(s.inner_of == std::vector<int>{0, 0});
  CHECK(s.world_at(1, 0) == 1);

  std::vector<Frame> one{chain(3)};
  CHECK(framelab::disjoint_sum(one).frame == chain(3));

  std::vector<Frame> pair{chain(2), chain(2)};
  CHECK(framelab::disjoint_sum(pair).frame.relation(0) ==
        Relation::from_pairs(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("sum over an index frame") {
  std::vector<Frame> parts{cluster2(), cluster2()};
  SumFrame s = framelab::sum_over_index(chain(2), parts);
  CHECK(s.frame.world_count() == 4);
  Relation expect = Relation::from_pairs(
      4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3},
          {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(s.frame.relation(0) == expect);

  Frame point(Alphabet({"a"}), 1);
  point.relation_mut(0).insert(0, 0);
  std::vector<Frame> single{chain(3)};
  CHECK(framelab::sum_over_index(point, single).frame == chain(3));
}

TEST_CASE("sum ignores index reflexivity") {
  framelab::Rng rng(67);
  Alphabet a({"a"});
  for (int trial = 0; trial < 30; ++trial) {
    int ni = 1 + static_cast<int>(rng() % 4);
    Frame index = framelab::random_frame(rng, a, ni, 0.4);
    std::vector<Frame> parts;
    for (int i = 0; i < ni; ++i)
      parts.push_back(framelab::random_frame(rng, a, 1 + static_cast<int>(rng() % 3), 0.4));
    Frame plain = framelab::sum_over_index(index, parts).frame;
    CHECK(plain == framelab::sum_over_index(framelab::reflexive_closure(index), parts).frame);
    CHECK(plain == framelab::sum_over_index(framelab::irreflexive_part(index), parts).frame);
  }
}

TEST_CASE("lexicographic sum vertical and horizontal parts") {
  Frame refl_point(Alphabet({"u"}), 1);
  refl_point.relation_mut(0).insert(0, 0);
  std::vector<Frame> one{chain(2)};
  SumFrame s = framelab::lex_sum(refl_point, one);
  CHECK(s.frame.alphabet().names == std::vector<std::string>{"u", "a"});
  CHECK(s.frame.relation(0) == Relation::full(2));
  CHECK(s.frame.relation(1) == chain(2).relation(0));

  Frame bare_point(Alphabet({"u"}), 1);
  SumFrame t = framelab::lex_sum(bare_point, one);
  CHECK(t.frame.relation(0).is_empty());
  CHECK(t.frame.relation(1) == chain(2).relation(0));

  Frame vertical_chain(Alphabet({"u"}), 2);
  vertical_chain.relation_mut(0).insert(0, 1);
  Frame pt(Alphabet({"a"}), 1);
  std::vector<Frame> points{pt, pt};
  SumFrame lex = framelab::lex_sum(vertical_chain, points);
  CHECK(lex.frame.relation(0) == Relation::from_pairs(2, {{0, 1}}));
  CHECK(lex.frame.relation(1).is_empty());
}

TEST_CASE("lexicographic sum equals its sum-over-index encoding") {
  framelab::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    int ni = 1 + static_cast<int>(rng() % 3);
    Frame index = framelab::random_frame(rng, Alphabet({"u"}), ni, 0.4);
    std::vector<Frame> parts;
    for (int i = 0; i < ni; ++i)
      parts.push_back(
          framelab::random_frame(rng, Alphabet({"a", "b"}), 1 + static_cast<int>(rng() % 3), 0.4));
    SumFrame direct = framelab::lex_sum(index, parts);
    SumFrame encoded = framelab::lex_as_sum(index, parts);
    CHECK(direct.frame == encoded.frame);
    CHECK(direct.index_of == encoded.index_of);
    CHECK(direct.layout == encoded.layout);
    CHECK(direct.frame.world_count() <= 6 * 2);
  }
}

TEST_CASE("footprint partition groups index worlds by touched blocks") {
  std::vector<Frame> parts{cluster2(), cluster2()};
  SumFrame s = framelab::sum_over_index(chain(2), parts);
  Partition v =
      Partition::from_blocks(4, {WorldSet::of(4, {0, 1}), WorldSet::of(4, {2, 3})});
  CHECK(framelab::footprint_partition(s, v) == Partition::discrete(2));
  CHECK(framelab::footprint_partition(s, Partition::trivial(4)) == Partition::trivial(2));
}

TEST_CASE("transfer of a refined partition onto the sum") {
  std::vector<Frame> parts{cluster2(), cluster2()};
  Frame index = chain(2);
  SumFrame s = framelab::sum_over_index(index, parts);
  Partition v =
      Partition::from_blocks(4, {WorldSet::of(4, {0, 1}), WorldSet::of(4, {2, 3})});
  Partition u = Partition::discrete(2);
  Partition transferred = framelab::transfer_partition(s, index, v, u);
  CHECK(transferred == v);
  CHECK(framelab::is_tuned(s.frame, transferred));
  CHECK(transferred.block_count() <= v.block_count() * u.block_count());

  Frame point(Alphabet({"a"}), 1);
  point.relation_mut(0).insert(0, 0);
  std::vector<Frame> single{cluster2()};
  SumFrame ssingle = framelab::sum_over_index(point, single);
  Partition vs = Partition::trivial(2);
  CHECK(framelab::transfer_partition(ssingle, point, vs, Partition::trivial(1)) == vs);
}

TEST_CASE("p-morphism checks") {
  Frame f = chain(3);
  WorldMap ident{f, f, {0, 1, 2}};
  CHECK(framelab::is_pmorphism(ident));

  Frame refl_point(Alphabet({"a"}), 1);
  refl_point.relation_mut(0).insert(0, 0);
  WorldMap collapse{cluster2(), refl_point, {0, 0}};
  CHECK(framelab::is_pmorphism(collapse));

  WorldMap bad{chain(2), refl_point, {0, 0}};
  auto failure = framelab::pmorphism_failure(bad);
  REQUIRE(failure.has_value());
  CHECK(!framelab::is_pmorphism(bad));
}

TEST_CASE("interaction conditions on explicit frames") {
  framelab::Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    int ni = 1 + static_cast<int>(rng() % 3);
    Frame index = framelab::random_frame(rng, Alphabet({"u"}), ni, 0.4);
    std::vector<Frame> parts;
    for (int i = 0; i < ni; ++i)
      parts.push_back(
          framelab::random_frame(rng, Alphabet({"a"}), 1 + static_cast<int>(rng() % 3), 0.4));
    SumFrame s = framelab::lex_sum(index, parts);
    CHECK(framelab::phi_conditions(s.frame, Alphabet({"u"}), Alphabet({"a"})));
  }

  Frame swap(Alphabet({"v", "h"}), 2);
  swap.relation_mut(0).insert(0, 1);
  swap.relation_mut(1).insert(1, 0);
  auto failure = framelab::phi_condition_failure(swap, Alphabet({"v"}), Alphabet({"h"}));
  REQUIRE(failure.has_value());
  CHECK(!framelab::phi_conditions(swap, Alphabet({"v"}), Alphabet({"h"})));

  Frame quiet(Alphabet({"v", "h"}), 3);
  quiet.relation_mut(0).insert(0, 2);
  CHECK(framelab::phi_conditions(quiet, Alphabet({"v"}), Alphabet({"h"})));
}

TEST_CASE("interaction conditions match axiom validity") {
  framelab::Rng rng(79);
  Alphabet vert({"v"});
  Alphabet horiz({"h"});
  auto axioms = framelab::phi_axioms(vert, horiz);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Frame f = framelab::random_frame(rng, Alphabet({"v", "h"}), n, 0.3);
    bool conditions = framelab::phi_conditions(f, vert, horiz);
    bool all_valid = true;
    for (const auto& axiom : axioms)
      if (!framelab::check_validity(f, axiom).valid) all_valid = false;
    CHECK(conditions == all_valid);
  }
}

TEST_CASE("stored interaction counterexample") {
  // Vertical step 1 -> 2 after a horizontal step 0 -> 1: the composite
  // (0,2) is in star(V union H) but no v-then-h split reproduces it.
  Frame bad(Alphabet({"v", "h"}), 3);
  bad.relation_mut(0).insert(1, 2);
  bad.relation_mut(1).insert(0, 1);

  auto failure = framelab::phi_condition_failure(bad, Alphabet({"v"}), Alphabet({"h"}));
  REQUIRE(failure.has_value());
  CHECK(failure->condition == 1);
  CHECK(!framelab::composition_splits(bad, Alphabet({"v"}), Alphabet({"h"})));

  auto axioms = framelab::phi_axioms(Alphabet({"v"}), Alphabet({"h"}));
  CHECK(!framelab::check_validity(bad, axioms[0]).valid);
}

TEST_CASE("root detection") {
  CHECK(framelab::find_root(chain(3)) == 0);
  CHECK(!framelab::find_root(Frame(Alphabet({"a"}), 2)).has_value());
  Frame single(Alphabet({"a"}), 1);
  CHECK(framelab::find_root(single) == 0);
  Frame two = uni(2, {{0, 1}, {1, 0}});
  CHECK(framelab::find_root(two) == 0);
}

TEST_CASE("cover of a single point") {
  Frame single(Alphabet({"v", "h"}), 1);
  framelab::CoverResult cr = framelab::oplus_cover(single, Alphabet({"v"}), Alphabet({"h"}), 0);
  CHECK(cr.cover.frame.world_count() == 1);
  CHECK(cr.map == std::vector<int>{0});
  CHECK(cr.pmorphism);
  CHECK(cr.surjective);
  CHECK(cr.composition_identity);
}

TEST_CASE("cover of a lexicographic sum is a surjective p-morphism") {
  framelab::Rng rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    int ni = 1 + static_cast<int>(rng() % 3);
    // Root the index at world 0 by wiring 0 to every index world.
    Frame index(Alphabet({"v"}), ni);
    for (int j = 0; j < ni; ++j) {
      index.relation_mut(0).insert(0, j);
      for (int i = 1; i < ni; ++i)
        if (rng() % 3 == 0) index.relation_mut(0).insert(i, j);
    }
    std::vector<Frame> parts;
    parts.push_back(framelab::random_frame(rng, Alphabet({"h"}), 1 + static_cast<int>(rng() % 2), 0.4));
    for (int i = 1; i < ni; ++i)
      parts.push_back(
          framelab::random_frame(rng, Alphabet({"h"}), 1 + static_cast<int>(rng() % 3), 0.4));
    SumFrame s = framelab::lex_sum(index, parts);
    Frame f = s.frame;
    REQUIRE(framelab::phi_conditions(f, Alphabet({"v"}), Alphabet({"h"})));
    auto root = framelab::find_root(f);
    if (!root) continue;
    framelab::CoverResult cr =
        framelab::oplus_cover(f, Alphabet({"v"}), Alphabet({"h"}), *root);
    CHECK(cr.pmorphism);
    CHECK(cr.surjective);
    CHECK(cr.composition_identity);
    for (std::size_t w = 0; w < cr.map.size(); ++w) {
      CHECK(cr.map[w] >= 0);
      CHECK(cr.map[w] < f.world_count());
    }
  }
}

TEST_CASE("sum constructors reject bad shapes") {
  std::vector<Frame> none;
  CHECK_THROWS_AS(framelab::disjoint_sum(none), framelab::InvalidArgument);
  std::vector<Frame> two{chain(2), chain(2)};
  CHECK_THROWS_AS(framelab::sum_over_index(chain(3), two), framelab::InvalidArgument);
  std::vector<Frame> mixed{chain(2), Frame(Alphabet({"b"}), 1)};
  CHECK_THROWS_AS(framelab::disjoint_sum(mixed), framelab::InvalidArgument);
  CHECK_THROWS_AS(framelab::lex_sum(chain(2), two), framelab::InvalidArgument);  // name clash
}
