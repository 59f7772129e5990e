#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "framelab/frame.hpp"

namespace framelab {

// Modal formula over the core connectives: falsum, propositional
// variables, implication, and one diamond per modality name. The derived
// connectives (negation, conjunction, disjunction, verum, box) are
// constructor sugar that normalizes to the core immediately; the printer
// re-sugars recognizable patterns. Values are immutable and share
// subterms freely.
class Formula {
 public:
  enum class Kind { Bottom, Var, Implies, Diamond };

  Formula() : Formula(bottom()) {}

  static Formula bottom();
  static Formula var(int index);
  static Formula implies(Formula a, Formula b);
  static Formula diamond(std::string modality, Formula a);

  // Derived forms.
  static Formula top();                       // false -> false
  static Formula negation(Formula a);         // a -> false
  static Formula conj(Formula a, Formula b);  // ~(a -> ~b)
  static Formula disj(Formula a, Formula b);  // ~a -> b
  static Formula box(std::string modality, Formula a);  // ~<m>~a

  Kind kind() const { return node_->kind; }
  int var_index() const;
  const std::string& modality() const;
  Formula lhs() const;    // Implies
  Formula rhs() const;    // Implies
  Formula child() const;  // Diamond

  bool operator==(const Formula& o) const;

  std::set<int> variables() const;
  std::set<std::string> modalities() const;
  bool modal_free() const { return modalities().empty(); }
  int modal_depth() const;

  // Stable identity of the underlying node, for memo tables.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    int var = 0;
    std::string mod;
    std::shared_ptr<const Node> a, b;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Disjunction of diamonds over every name in the alphabet, in alphabet
// order; the alphabet must be non-empty.
Formula diamond_any(const Alphabet& alphabet, Formula a);

// i-fold iteration of diamond_any.
Formula diamond_any_pow(const Alphabet& alphabet, int i, Formula a);

// Disjunction of diamond_any_pow for 0 <= i <= m, ascending. m = 0 yields
// the formula itself.
Formula diamond_any_le(const Alphabet& alphabet, int m, Formula a);

// Dual of diamond_any_le; m = 0 yields the formula itself.
Formula box_any_le(const Alphabet& alphabet, int m, Formula a);

// Height probe over a single modality: b_formula(0) = false,
// b_formula(h) = p_h -> [](<>p_h | b_formula(h-1)).
Formula b_formula(int h, const std::string& modality = "a");

// Height probe with every diamond and box bounded to m steps over the
// whole alphabet.
Formula b_m_formula(int h, int m, const Alphabet& alphabet);

// <=m+1 step reachability collapses: diamond_any_pow(m+1) p0 implies
// diamond_any_le(m) p0.
Formula pretransitivity_axiom(int m, const Alphabet& alphabet);

// Interaction axioms for a vertical and a horizontal alphabet: for every
// vertical v and horizontal h, in (vertical, horizontal) lexicographic
// order,
//   <h><v>p0 -> <v>p0,   <v><h>p0 -> <v>p0,   <v>p0 -> [h]<v>p0.
std::vector<Formula> phi_axioms(const Alphabet& vertical, const Alphabet& horizontal);

// Replaces every diamond by "diamond or stay": validity transfers between
// a frame and its reflexive closure.
Formula reflexive_translate(const Formula& phi);

// Relativizes phi to the worlds satisfying xi: diamonds only step into xi.
Formula relativize(const Formula& phi, const Formula& xi);

// Replaces each diamond of a single-modality formula by
// diamond_any_le(alphabet, m, .). Errors when phi uses two or more
// distinct modalities.
Formula m_translate(const Formula& phi, int m, const Alphabet& alphabet);

// Canonical text form; parse(print(phi)) == phi.
std::string print(const Formula& phi);

// Parser for the grammar (precedence low to high: ->, |, &, prefix):
//   phi ::= "false" | "true" | "p"NAT | "~"phi | phi"&"phi | phi"|"phi
//         | phi"->"phi | "<"NAME">"phi | "["NAME"]"phi | "("phi")"
// "->", "|", "&" associate to the right.
Formula parse(const std::string& text);

}  // namespace framelab
