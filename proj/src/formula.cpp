#include "framelab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace framelab {

Formula Formula::bottom() {
  static const Formula instance{std::make_shared<Node>(Node{Kind::Bottom, 0, {}, nullptr, nullptr})};
  return instance;
}

Formula Formula::var(int index) {
  if (index < 0) throw InvalidArgument("variable index must be non-negative");
  return Formula{std::make_shared<Node>(Node{Kind::Var, index, {}, nullptr, nullptr})};
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula{std::make_shared<Node>(Node{Kind::Implies, 0, {}, a.node_, b.node_})};
}

Formula Formula::diamond(std::string modality, Formula a) {
  if (modality.empty()) throw InvalidArgument("modality name must be non-empty");
  return Formula{
      std::make_shared<Node>(Node{Kind::Diamond, 0, std::move(modality), a.node_, nullptr})};
}

Formula Formula::top() { return implies(bottom(), bottom()); }
Formula Formula::negation(Formula a) { return implies(std::move(a), bottom()); }
Formula Formula::conj(Formula a, Formula b) {
  return negation(implies(std::move(a), negation(std::move(b))));
}
Formula Formula::disj(Formula a, Formula b) {
  return implies(negation(std::move(a)), std::move(b));
}
Formula Formula::box(std::string modality, Formula a) {
  return negation(diamond(std::move(modality), negation(std::move(a))));
}

int Formula::var_index() const {
  if (kind() != Kind::Var) throw InvalidArgument("not a variable");
  return node_->var;
}

const std::string& Formula::modality() const {
  if (kind() != Kind::Diamond) throw InvalidArgument("not a diamond");
  return node_->mod;
}

Formula Formula::lhs() const {
  if (kind() != Kind::Implies) throw InvalidArgument("not an implication");
  return Formula{node_->a};
}

Formula Formula::rhs() const {
  if (kind() != Kind::Implies) throw InvalidArgument("not an implication");
  return Formula{node_->b};
}

Formula Formula::child() const {
  if (kind() != Kind::Diamond) throw InvalidArgument("not a diamond");
  return Formula{node_->a};
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Bottom:
      return true;
    case Kind::Var:
      return node_->var == o.node_->var;
    case Kind::Implies:
      return lhs() == o.lhs() && rhs() == o.rhs();
    case Kind::Diamond:
      return node_->mod == o.node_->mod && child() == o.child();
  }
  return false;
}

std::set<int> Formula::variables() const {
  std::set<int> out;
  auto walk = [&](auto&& self, const Formula& f) -> void {
    switch (f.kind()) {
      case Kind::Bottom:
        break;
      case Kind::Var:
        out.insert(f.var_index());
        break;
      case Kind::Implies:
        self(self, f.lhs());
        self(self, f.rhs());
        break;
      case Kind::Diamond:
        self(self, f.child());
        break;
    }
  };
  walk(walk, *this);
  return out;
}

std::set<std::string> Formula::modalities() const {
  std::set<std::string> out;
  auto walk = [&](auto&& self, const Formula& f) -> void {
    switch (f.kind()) {
      case Kind::Bottom:
      case Kind::Var:
        break;
      case Kind::Implies:
        self(self, f.lhs());
        self(self, f.rhs());
        break;
      case Kind::Diamond:
        out.insert(f.modality());
        self(self, f.child());
        break;
    }
  };
  walk(walk, *this);
  return out;
}

int Formula::modal_depth() const {
  std::unordered_map<const void*, int> memo;
  auto walk = [&](auto&& self, const Formula& f) -> int {
    auto it = memo.find(f.id());
    if (it != memo.end()) return it->second;
    int d = 0;
    switch (f.kind()) {
      case Kind::Bottom:
      case Kind::Var:
        d = 0;
        break;
      case Kind::Implies:
        d = std::max(self(self, f.lhs()), self(self, f.rhs()));
        break;
      case Kind::Diamond:
        d = 1 + self(self, f.child());
        break;
    }
    memo.emplace(f.id(), d);
    return d;
  };
  return walk(walk, *this);
}

Formula diamond_any(const Alphabet& alphabet, Formula a) {
  if (alphabet.size() == 0) throw InvalidArgument("alphabet must be non-empty");
  Formula out = Formula::diamond(alphabet.name(alphabet.size() - 1), a);
  for (int d = alphabet.size() - 2; d >= 0; --d)
    out = Formula::disj(Formula::diamond(alphabet.name(d), a), out);
  return out;
}

Formula diamond_any_pow(const Alphabet& alphabet, int i, Formula a) {
  if (i < 0) throw InvalidArgument("iteration count must be non-negative");
  Formula out = std::move(a);
  for (int j = 0; j < i; ++j) out = diamond_any(alphabet, out);
  return out;
}

Formula diamond_any_le(const Alphabet& alphabet, int m, Formula a) {
  if (m < 0) throw InvalidArgument("step bound must be non-negative");
  if (alphabet.size() == 0) throw InvalidArgument("alphabet must be non-empty");
  Formula out = diamond_any_pow(alphabet, m, a);
  for (int i = m - 1; i >= 0; --i)
    out = Formula::disj(diamond_any_pow(alphabet, i, a), out);
  return out;
}

Formula box_any_le(const Alphabet& alphabet, int m, Formula a) {
  if (m < 0) throw InvalidArgument("step bound must be non-negative");
  if (alphabet.size() == 0) throw InvalidArgument("alphabet must be non-empty");
  if (m == 0) return a;
  return Formula::negation(diamond_any_le(alphabet, m, Formula::negation(a)));
}

Formula b_formula(int h, const std::string& modality) {
  if (h < 0) throw InvalidArgument("height must be non-negative");
  Formula out = Formula::bottom();
  for (int i = 1; i <= h; ++i) {
    Formula p = Formula::var(i);
    out = Formula::implies(
        p, Formula::box(modality, Formula::disj(Formula::diamond(modality, p), out)));
  }
  return out;
}

Formula b_m_formula(int h, int m, const Alphabet& alphabet) {
  if (h < 0) throw InvalidArgument("height must be non-negative");
  if (m < 0) throw InvalidArgument("step bound must be non-negative");
  if (alphabet.size() == 0) throw InvalidArgument("alphabet must be non-empty");
  Formula out = Formula::bottom();
  for (int i = 1; i <= h; ++i) {
    Formula p = Formula::var(i);
    out = Formula::implies(
        p, box_any_le(alphabet, m, Formula::disj(diamond_any_le(alphabet, m, p), out)));
  }
  return out;
}

Formula pretransitivity_axiom(int m, const Alphabet& alphabet) {
  if (m < 0) throw InvalidArgument("step bound must be non-negative");
  if (alphabet.size() == 0) throw InvalidArgument("alphabet must be non-empty");
  Formula p = Formula::var(0);
  return Formula::implies(diamond_any_pow(alphabet, m + 1, p),
                          diamond_any_le(alphabet, m, p));
}

std::vector<Formula> phi_axioms(const Alphabet& vertical, const Alphabet& horizontal) {
  if (vertical.size() == 0 || horizontal.size() == 0)
    throw InvalidArgument("both alphabets must be non-empty");
  for (const auto& v : vertical.names)
    if (horizontal.index_of(v) >= 0)
      throw InvalidArgument("alphabets must be disjoint; '" + v + "' appears twice");
  Formula p = Formula::var(0);
  std::vector<Formula> out;
  for (const auto& v : vertical.names) {
    for (const auto& h : horizontal.names) {
      Formula vp = Formula::diamond(v, p);
      out.push_back(Formula::implies(Formula::diamond(h, vp), vp));
      out.push_back(Formula::implies(Formula::diamond(v, Formula::diamond(h, p)), vp));
      out.push_back(Formula::implies(vp, Formula::box(h, vp)));
    }
  }
  return out;
}

Formula reflexive_translate(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Var:
      return phi;
    case Formula::Kind::Implies:
      return Formula::implies(reflexive_translate(phi.lhs()), reflexive_translate(phi.rhs()));
    case Formula::Kind::Diamond: {
      Formula sub = reflexive_translate(phi.child());
      return Formula::disj(Formula::diamond(phi.modality(), sub), sub);
    }
  }
  throw InvalidArgument("unreachable formula kind");
}

Formula relativize(const Formula& phi, const Formula& xi) {
  switch (phi.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Var:
      return phi;
    case Formula::Kind::Implies:
      return Formula::implies(relativize(phi.lhs(), xi), relativize(phi.rhs(), xi));
    case Formula::Kind::Diamond:
      return Formula::diamond(phi.modality(),
                              Formula::conj(xi, relativize(phi.child(), xi)));
  }
  throw InvalidArgument("unreachable formula kind");
}

namespace {

Formula m_translate_rec(const Formula& phi, int m, const Alphabet& alphabet) {
  switch (phi.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Var:
      return phi;
    case Formula::Kind::Implies:
      return Formula::implies(m_translate_rec(phi.lhs(), m, alphabet),
                              m_translate_rec(phi.rhs(), m, alphabet));
    case Formula::Kind::Diamond:
      return diamond_any_le(alphabet, m, m_translate_rec(phi.child(), m, alphabet));
  }
  throw InvalidArgument("unreachable formula kind");
}

}  // namespace

Formula m_translate(const Formula& phi, int m, const Alphabet& alphabet) {
  if (m < 0) throw InvalidArgument("step bound must be non-negative");
  if (phi.modalities().size() > 1)
    throw InvalidArgument("input must use a single modality");
  return m_translate_rec(phi, m, alphabet);
}

namespace {

// Print levels, low to high: implication 0, disjunction 1, conjunction 2,
// prefix 3, atoms 4.
void print_at(const Formula& f, int level, std::string& out);

bool is_bottom(const Formula& f) { return f.kind() == Formula::Kind::Bottom; }

bool is_negation(const Formula& f) {
  return f.kind() == Formula::Kind::Implies && is_bottom(f.rhs());
}

void print_at(const Formula& f, int level, std::string& out) {
  auto paren = [&](int natural, auto body) {
    if (natural < level) {
      out += "(";
      body();
      out += ")";
    } else {
      body();
    }
  };

  switch (f.kind()) {
    case Formula::Kind::Bottom:
      out += "false";
      return;
    case Formula::Kind::Var:
      out += "p" + std::to_string(f.var_index());
      return;
    case Formula::Kind::Diamond:
      paren(3, [&] {
        out += "<" + f.modality() + ">";
        print_at(f.child(), 3, out);
      });
      return;
    case Formula::Kind::Implies:
      break;
  }

  Formula a = f.lhs(), b = f.rhs();
  if (is_bottom(b)) {
    if (is_bottom(a)) {
      out += "true";
      return;
    }
    // box: ~<m>~x
    if (a.kind() == Formula::Kind::Diamond && is_negation(a.child())) {
      paren(3, [&] {
        out += "[" + a.modality() + "]";
        print_at(a.child().lhs(), 3, out);
      });
      return;
    }
    // conjunction: ~(x -> ~y)
    if (a.kind() == Formula::Kind::Implies && is_negation(a.rhs())) {
      paren(2, [&] {
        print_at(a.lhs(), 3, out);
        out += " & ";
        print_at(a.rhs().lhs(), 2, out);
      });
      return;
    }
    paren(3, [&] {
      out += "~";
      print_at(a, 3, out);
    });
    return;
  }
  // disjunction: ~x -> y
  if (is_negation(a)) {
    paren(1, [&] {
      print_at(a.lhs(), 2, out);
      out += " | ";
      print_at(b, 1, out);
    });
    return;
  }
  paren(0, [&] {
    print_at(a, 1, out);
    out += " -> ";
    print_at(b, 0, out);
  });
}

}  // namespace

std::string print(const Formula& phi) {
  std::string out;
  print_at(phi, 0, out);
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_word(const char* w) {
    skip_space();
    std::size_t len = std::string_view(w).size();
    if (text.compare(pos, len, w) != 0) return false;
    std::size_t end = pos + len;
    if (end < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
      return false;
    pos = end;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  std::string name(char closing) {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected modality name");
    std::string n = text.substr(start, pos - start);
    if (!eat(closing)) fail(std::string("expected '") + closing + "'");
    return n;
  }

  Formula formula() {
    Formula left = or_expr();
    skip_space();
    if (text.compare(pos, 2, "->") == 0) {
      pos += 2;
      return Formula::implies(std::move(left), formula());
    }
    return left;
  }

  Formula or_expr() {
    Formula left = and_expr();
    skip_space();
    if (pos < text.size() && text[pos] == '|') {
      ++pos;
      return Formula::disj(std::move(left), or_expr());
    }
    return left;
  }

  Formula and_expr() {
    Formula left = prefix();
    skip_space();
    if (pos < text.size() && text[pos] == '&') {
      ++pos;
      return Formula::conj(std::move(left), and_expr());
    }
    return left;
  }

  Formula prefix() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    if (eat('~')) return Formula::negation(prefix());
    if (eat('<')) {
      std::string m = name('>');
      return Formula::diamond(std::move(m), prefix());
    }
    if (eat('[')) {
      std::string m = name(']');
      return Formula::box(std::move(m), prefix());
    }
    return atom();
  }

  Formula atom() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    if (eat('(')) {
      Formula f = formula();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (eat_word("false")) return Formula::bottom();
    if (eat_word("true")) return Formula::top();
    if (text[pos] == 'p') {
      std::size_t d = pos + 1;
      std::size_t start = d;
      while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
      if (d == start) fail("expected variable index after 'p'");
      int index = std::stoi(text.substr(start, d - start));
      pos = d;
      return Formula::var(index);
    }
    fail("expected a formula");
  }
};

}  // namespace

Formula parse(const std::string& text) {
  Parser p(text);
  p.skip_space();
  if (p.pos >= text.size()) throw ParseError("empty input", 0);
  Formula f = p.formula();
  p.skip_space();
  if (p.pos < text.size()) p.fail("unexpected trailing input");
  return f;
}

}  // namespace framelab
