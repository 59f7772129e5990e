#include <doctest.h>

#include <random>

#include "framelab/formula.hpp"
#include "framelab/generate.hpp"

using framelab::Alphabet;
using framelab::Formula;
using framelab::parse;
using framelab::print;

namespace {

Formula v(int i) { return Formula::var(i); }

}  // namespace

TEST_CASE("parser handles the grammar") {
  CHECK(parse("<a>(p0 & ~p1)") ==
        Formula::diamond("a", Formula::conj(v(0), Formula::negation(v(1)))));
  CHECK(parse("p0 -> p1 -> p2") ==
        Formula::implies(v(0), Formula::implies(v(1), v(2))));
  CHECK(parse("false") == Formula::bottom());
  CHECK(parse("true") == Formula::top());
  CHECK(parse("[b]p3") == Formula::box("b", v(3)));
  // & binds tighter than |, which binds tighter than ->.
  CHECK(parse("p0 | p1 & p2") == Formula::disj(v(0), Formula::conj(v(1), v(2))));
  CHECK(parse("p0 & p1 -> p2") == Formula::implies(Formula::conj(v(0), v(1)), v(2)));

  CHECK_THROWS_AS(parse("<a>"), framelab::ParseError);
  CHECK_THROWS_AS(parse(""), framelab::ParseError);
  CHECK_THROWS_AS(parse("p0 &"), framelab::ParseError);
  CHECK_THROWS_AS(parse("(p0"), framelab::ParseError);
  CHECK_THROWS_AS(parse("p0 p1"), framelab::ParseError);
}

TEST_CASE("formula queries") {
  Formula phi = parse("<a>(p0 & [b]p2)");
  CHECK(phi.variables() == std::set<int>{0, 2});
  CHECK(phi.modalities() == std::set<std::string>{"a", "b"});
  CHECK(phi.modal_depth() == 2);
  CHECK(!phi.modal_free());
  CHECK(parse("p0 -> ~p1").modal_free());
}

TEST_CASE("bounded modal prefixes") {
  Alphabet a({"a"});
  Alphabet ab({"a", "b"});
  Formula p = v(0);
  CHECK(framelab::diamond_any(ab, p) ==
        Formula::disj(Formula::diamond("a", p), Formula::diamond("b", p)));
  CHECK(framelab::diamond_any_le(a, 0, p) == p);
  CHECK(framelab::box_any_le(a, 0, p) == p);
  CHECK(framelab::diamond_any_le(a, 1, p) == Formula::disj(p, Formula::diamond("a", p)));
}

TEST_CASE("height probe schemas") {
  CHECK(framelab::b_formula(0) == Formula::bottom());
  Formula b1 = Formula::implies(
      v(1), Formula::box("a", Formula::disj(Formula::diamond("a", v(1)), Formula::bottom())));
  CHECK(framelab::b_formula(1) == b1);
  Formula b2 = Formula::implies(
      v(2), Formula::box("a", Formula::disj(Formula::diamond("a", v(2)), b1)));
  CHECK(framelab::b_formula(2) == b2);
}

TEST_CASE("bounded height probe schemas") {
  Alphabet a({"a"});
  CHECK(framelab::b_m_formula(0, 0, a) == Formula::bottom());
  CHECK(framelab::b_m_formula(0, 3, a) == Formula::bottom());

  Formula dle1 = Formula::disj(v(1), Formula::diamond("a", v(1)));  // diamond^{<=1} p1
  Formula body = Formula::disj(dle1, Formula::bottom());
  CHECK(framelab::b_m_formula(1, 1, a) ==
        Formula::implies(v(1), framelab::box_any_le(a, 1, body)));
  // m = 0 degenerates both prefixes to the operand itself.
  CHECK(framelab::b_m_formula(1, 0, a) ==
        Formula::implies(v(1), Formula::disj(v(1), Formula::bottom())));
}

TEST_CASE("pretransitivity axioms") {
  Alphabet a({"a"});
  CHECK(framelab::pretransitivity_axiom(1, a) ==
        Formula::implies(Formula::diamond("a", Formula::diamond("a", v(0))),
                         Formula::disj(v(0), Formula::diamond("a", v(0)))));
  CHECK(framelab::pretransitivity_axiom(0, a) ==
        Formula::implies(Formula::diamond("a", v(0)), v(0)));

  Alphabet ab({"a", "b"});
  Formula da = framelab::diamond_any(ab, v(0));
  CHECK(framelab::pretransitivity_axiom(1, ab) ==
        Formula::implies(framelab::diamond_any(ab, da), Formula::disj(v(0), da)));
}

TEST_CASE("interaction axioms for a modality split") {
  Alphabet vert({"v"});
  Alphabet horiz({"h"});
  auto axioms = framelab::phi_axioms(vert, horiz);
  REQUIRE(axioms.size() == 3);
  Formula dv = Formula::diamond("v", v(0));
  CHECK(axioms[0] == Formula::implies(Formula::diamond("h", dv), dv));
  CHECK(axioms[1] == Formula::implies(Formula::diamond("v", Formula::diamond("h", v(0))), dv));
  CHECK(axioms[2] == Formula::implies(dv, Formula::box("h", dv)));

  CHECK(framelab::phi_axioms(Alphabet({"v1", "v2"}), horiz).size() == 6);
  CHECK_THROWS_AS(framelab::phi_axioms(vert, vert), framelab::InvalidArgument);
}

TEST_CASE("reflexive translation clauses") {
  CHECK(framelab::reflexive_translate(v(0)) == v(0));
  Formula d = Formula::diamond("a", v(0));
  CHECK(framelab::reflexive_translate(d) == Formula::disj(d, v(0)));
  CHECK(framelab::reflexive_translate(Formula::diamond("a", d)) ==
        Formula::disj(Formula::diamond("a", Formula::disj(d, v(0))), Formula::disj(d, v(0))));
}

TEST_CASE("relativization clauses") {
  Formula q = v(5);
  CHECK(framelab::relativize(v(0), q) == v(0));
  CHECK(framelab::relativize(Formula::diamond("a", v(0)), v(1)) ==
        Formula::diamond("a", Formula::conj(v(1), v(0))));
  CHECK(framelab::relativize(Formula::bottom(), q) == Formula::bottom());
  CHECK(framelab::relativize(Formula::implies(v(0), v(2)), q) ==
        Formula::implies(v(0), v(2)));
}

TEST_CASE("step-bounded translation") {
  Alphabet a({"a"});
  CHECK(framelab::m_translate(Formula::diamond("a", v(0)), 1, a) ==
        Formula::disj(v(0), Formula::diamond("a", v(0))));
  CHECK(framelab::m_translate(v(0), 2, a) == v(0));
  CHECK(framelab::m_translate(Formula::diamond("a", Formula::diamond("a", v(0))), 0, a) == v(0));
}

TEST_CASE("print and parse round-trip") {
  CHECK(print(parse("p0 -> p1 -> p2")) == "p0 -> p1 -> p2");
  CHECK(print(parse("~(p0 & true)")) == "~(p0 & true)");

  framelab::Rng rng(20240811);
  Alphabet ab({"a", "b"});
  for (int trial = 0; trial < 10000; ++trial) {
    Formula phi = framelab::random_formula(rng, ab, 3, 1 + trial % 8);
    Formula back = parse(print(phi));
    CHECK(back == phi);
  }
}
