#include <doctest.h>

#include <random>

#include "framelab/generate.hpp"
#include "framelab/model.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using framelab::Alphabet;
using framelab::Formula;
using framelab::Frame;
using framelab::Model;
using framelab::parse;
using framelab::Partition;
using framelab::WorldSet;
using testutil::chain;
using testutil::full_frame;
using testutil::uni;

TEST_CASE("evaluate on the one-step frame") {
  Model m{chain(2), {WorldSet::of(2, {1})}};
  CHECK(evaluate(m, parse("<a>p0")) == WorldSet::of(2, {0}));
  CHECK(evaluate(m, parse("[a]p0")) == WorldSet::full(2));
  CHECK(evaluate(m, parse("false")) == WorldSet(2));
  CHECK(evaluate(m, parse("~p0")) == WorldSet::of(2, {0}));
  CHECK(evaluate(m, parse("p0 -> <a>p0")) == WorldSet::of(2, {0}));
}

TEST_CASE("evaluate agrees with the recursive set oracle") {
  framelab::Rng rng(41);
  Alphabet ab({"a", "b"});
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Frame f = framelab::random_frame(rng, ab, n, 0.35);
    std::vector<WorldSet> val;
    std::vector<oracle::IntSet> oval;
    for (int j = 0; j < 3; ++j) {
      WorldSet s = framelab::random_subset(rng, n);
      val.push_back(s);
      oval.push_back(oracle::set_of(s));
    }
    Formula phi = framelab::random_formula(rng, ab, 3, 1 + trial % 5);
    Model m{f, val};
    CHECK(oracle::set_of(evaluate(m, phi)) == oracle::eval(f, oval, phi));
  }
}

TEST_CASE("validity on the spec shapes") {
  Frame point(Alphabet({"a"}), 1);
  CHECK(framelab::check_validity(point, parse("[a]false")).valid);

  Frame rt2 = uni(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(framelab::check_validity(rt2, framelab::b_formula(2)).valid);
  auto b1 = framelab::check_validity(rt2, framelab::b_formula(1));
  CHECK(!b1.valid);

  CHECK(!framelab::check_validity(chain(3), framelab::pretransitivity_axiom(1, Alphabet({"a"})))
             .valid);
}

TEST_CASE("validity counterexamples are genuine") {
  framelab::Rng rng(43);
  Alphabet a({"a"});
  int invalid_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Frame f = framelab::random_frame(rng, a, n, 0.3);
    Formula phi = framelab::random_formula(rng, a, 2, 1 + trial % 4);
    auto res = framelab::check_validity(f, phi);
    CHECK(res.valid == oracle::valid(f, phi));
    if (!res.valid) {
      ++invalid_seen;
      std::vector<WorldSet> val(static_cast<std::size_t>(3), WorldSet(n));
      for (const auto& [var, set] : res.witness_valuation)
        val[static_cast<std::size_t>(var)] = set;
      Model m{f, val};
      CHECK(!evaluate(m, phi).contains(res.witness_world));
    }
  }
  CHECK(invalid_seen > 0);
}

TEST_CASE("validity cap is a hard error") {
  Frame f = full_frame(8);
  Formula wide = parse("p0 | p1 | p2");  // 24 valuation bits
  CHECK_THROWS_AS(framelab::check_validity(f, wide, 22), framelab::CapExceeded);
  CHECK(!framelab::check_validity(f, wide, 24).valid);
}

TEST_CASE("theta partition on the spec shapes") {
  Model full3{full_frame(3), {}};
  CHECK(framelab::theta_partition(full3) == Partition::trivial(3));

  Model step{chain(2), {}};
  CHECK(framelab::theta_partition(step) == Partition::discrete(2));

  Model ghost{chain(2), {WorldSet(2)}};
  CHECK(framelab::theta_partition(ghost) == framelab::theta_partition(step));
}

TEST_CASE("theta partition matches the formula-extension oracle") {
  framelab::Rng rng(47);
  Alphabet ab({"a", "b"});
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Frame f = framelab::random_frame(rng, ab, n, 0.35);
    std::vector<WorldSet> val;
    std::vector<oracle::IntSet> oval;
    for (int j = 0; j < static_cast<int>(rng() % 2); ++j) {
      WorldSet s = framelab::random_subset(rng, n);
      val.push_back(s);
      oval.push_back(oracle::set_of(s));
    }
    Model m{f, val};
    CHECK(oracle::blocks_of(framelab::theta_partition(m)) == oracle::theta_partition(f, oval));
  }
}

TEST_CASE("theta partition is induced by the closure family") {
  framelab::Rng rng(53);
  Alphabet a({"a"});
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Frame f = framelab::random_frame(rng, a, n, 0.35);
    std::vector<WorldSet> val{framelab::random_subset(rng, n)};
    Model m{f, val};
    framelab::SubsetFamily fam = framelab::subalgebra_closure(f, val);
    std::vector<WorldSet> members(fam.members().begin(), fam.members().end());
    CHECK(framelab::theta_partition(m) == framelab::induced_partition(n, members));
  }
}

TEST_CASE("subframe validity on the spec shapes") {
  Frame refl(Alphabet({"a"}), 1);
  refl.relation_mut(0).insert(0, 0);
  CHECK(framelab::subframe_validity(refl, parse("<a>true")));
  CHECK(!framelab::subframe_validity(chain(2), framelab::b_formula(1)));
  CHECK(framelab::subframe_validity(chain(2), parse("true")));
}

TEST_CASE("subframe validity agrees with the per-subset oracle") {
  framelab::Rng rng(59);
  Alphabet a({"a"});
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Frame f = framelab::random_frame(rng, a, n, 0.35);
    Formula phi = framelab::random_formula(rng, a, 1, 1 + trial % 3);
    CHECK(framelab::subframe_validity(f, phi) == oracle::subframe_valid(f, phi));
  }
}

TEST_CASE("relativized box probe") {
  // Carving V = {0,2} out of the 3-chain kills every edge, so the cone of
  // each V-world is itself.
  Frame f = chain(3);
  Model m{f, {WorldSet(3), WorldSet::of(3, {1})}};
  Formula xi = parse("~p1");
  CHECK(framelab::relativized_box_reach(m, xi, parse("p1"), 0, 0));
  CHECK(framelab::relativized_box_reach(m, xi, parse("p1"), 2, 0));
  CHECK(framelab::relativized_box_reach(m, xi, parse("~p1"), 1, 2));

  // Whole-domain relativizer with enough steps forces agreement.
  framelab::Rng rng(61);
  Alphabet a({"a"});
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    Frame g = framelab::random_frame(rng, a, n, 0.4);
    WorldSet p0 = framelab::random_subset(rng, n);
    Model gm{g, {p0}};
    int at = static_cast<int>(rng() % n);
    CHECK(framelab::relativized_box_reach(gm, parse("true"), parse("p0"), n, at));
  }

  // A true-here, false-later target makes the 0-step probe disagree with
  // the unbounded reachability side.
  Model see{chain(2), {WorldSet::of(2, {0})}};
  CHECK(!framelab::relativized_box_reach(see, parse("true"), parse("p0"), 0, 0));
  CHECK(framelab::relativized_box_reach(see, parse("true"), parse("p0"), 1, 0));

  CHECK_THROWS_AS(framelab::relativized_box_reach(see, parse("false"), parse("p0"), 1, 0),
                  framelab::InvalidArgument);
  CHECK_THROWS_AS(framelab::relativized_box_reach(see, parse("true"), parse("<a>p0"), 1, 0),
                  framelab::InvalidArgument);
}

TEST_CASE("model construction validates universes") {
  CHECK_THROWS_AS(Model(chain(2), {WorldSet(3)}), framelab::InvalidArgument);
}
