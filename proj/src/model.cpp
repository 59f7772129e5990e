#include "framelab/model.hpp"

#include <algorithm>
#include <unordered_map>

namespace framelab {

Model::Model(Frame f, std::vector<WorldSet> sets)
    : frame(std::move(f)), valuation(std::move(sets)) {
  for (const auto& s : valuation)
    if (s.universe() != frame.world_count())
      throw InvalidArgument("valuation set outside frame domain");
}

namespace {

WorldSet evaluate_rec(const Model& m, const Formula& phi,
                      std::unordered_map<const void*, WorldSet>& memo) {
  auto it = memo.find(phi.id());
  if (it != memo.end()) return it->second;
  WorldSet out(m.frame.world_count());
  switch (phi.kind()) {
    case Formula::Kind::Bottom:
      break;
    case Formula::Kind::Var: {
      int v = phi.var_index();
      if (v >= m.variable_count())
        throw InvalidArgument("variable p" + std::to_string(v) + " not interpreted");
      out = m.valuation[static_cast<std::size_t>(v)];
      break;
    }
    case Formula::Kind::Implies: {
      WorldSet a = evaluate_rec(m, phi.lhs(), memo);
      WorldSet b = evaluate_rec(m, phi.rhs(), memo);
      out = a.complement() | b;
      break;
    }
    case Formula::Kind::Diamond: {
      WorldSet sub = evaluate_rec(m, phi.child(), memo);
      out = m.frame.relation(phi.modality()).preimage(sub);
      break;
    }
  }
  memo.emplace(phi.id(), out);
  return out;
}

// Flat evaluation program over deduplicated subterms, for the inner loop
// of validity enumeration.
struct CompiledFormula {
  enum class Op { Bottom, Var, Implies, Diamond };
  struct Step {
    Op op;
    int a = -1, b = -1;  // operand slots
    int var = -1;        // Var: position in the sorted variable list
    int modality = -1;   // Diamond: relation index
  };
  std::vector<Step> steps;  // topological, result in the last slot
  std::vector<int> vars;    // sorted distinct variable indices

  static CompiledFormula build(const Frame& f, const Formula& phi) {
    CompiledFormula c;
    auto vs = phi.variables();
    c.vars.assign(vs.begin(), vs.end());
    std::unordered_map<const void*, int> slot;
    auto walk = [&](auto&& self, const Formula& g) -> int {
      auto it = slot.find(g.id());
      if (it != slot.end()) return it->second;
      Step s{};
      switch (g.kind()) {
        case Formula::Kind::Bottom:
          s.op = Op::Bottom;
          break;
        case Formula::Kind::Var: {
          s.op = Op::Var;
          auto pos = std::lower_bound(c.vars.begin(), c.vars.end(), g.var_index());
          s.var = static_cast<int>(pos - c.vars.begin());
          break;
        }
        case Formula::Kind::Implies:
          s.op = Op::Implies;
          s.a = self(self, g.lhs());
          s.b = self(self, g.rhs());
          break;
        case Formula::Kind::Diamond:
          s.op = Op::Diamond;
          s.modality = f.alphabet().require(g.modality());
          s.a = self(self, g.child());
          break;
      }
      c.steps.push_back(s);
      int idx = static_cast<int>(c.steps.size()) - 1;
      slot.emplace(g.id(), idx);
      return idx;
    };
    walk(walk, phi);
    return c;
  }

  // Evaluates against the given variable extensions; true when phi holds
  // at every world. Reuses the slot buffers, so the hot loop does not
  // allocate.
  bool globally_true(const Frame& f, const std::vector<WorldSet>& var_sets,
                     std::vector<WorldSet>& slots) const {
    int n = f.world_count();
    if (slots.size() != steps.size()) slots.assign(steps.size(), WorldSet(n));
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Step& s = steps[i];
      WorldSet& out = slots[i];
      switch (s.op) {
        case Op::Bottom:
          out.clear();
          break;
        case Op::Var:
          out = var_sets[static_cast<std::size_t>(s.var)];
          break;
        case Op::Implies:
          out = slots[static_cast<std::size_t>(s.a)];
          out.invert();
          out |= slots[static_cast<std::size_t>(s.b)];
          break;
        case Op::Diamond:
          f.relation(s.modality).preimage_into(slots[static_cast<std::size_t>(s.a)], out);
          break;
      }
    }
    return slots.back().is_full();
  }
};

}  // namespace

WorldSet evaluate(const Model& m, const Formula& phi) {
  std::unordered_map<const void*, WorldSet> memo;
  return evaluate_rec(m, phi, memo);
}

ValidityResult check_validity(const Frame& f, const Formula& phi, int cap) {
  int n = f.world_count();
  CompiledFormula c = CompiledFormula::build(f, phi);
  int k = static_cast<int>(c.vars.size());
  long long bits = static_cast<long long>(n) * k;
  if (bits > cap || bits >= 62)
    throw CapExceeded("validity check needs " + std::to_string(n) + " * " +
                      std::to_string(k) + " valuation bits, cap is " + std::to_string(cap));

  std::vector<WorldSet> var_sets(static_cast<std::size_t>(k), WorldSet(n));
  std::vector<WorldSet> slots;
  for (unsigned long long code = 0; code < (1ULL << bits); ++code) {
    for (int v = 0; v < k; ++v) {
      WorldSet& s = var_sets[static_cast<std::size_t>(v)];
      s.clear();
      for (int w = 0; w < n; ++w)
        if ((code >> (static_cast<long long>(v) * n + w)) & 1) s.insert(w);
    }
    if (!c.globally_true(f, var_sets, slots)) {
      ValidityResult r;
      r.valid = false;
      for (int v = 0; v < k; ++v)
        r.witness_valuation.emplace_back(c.vars[static_cast<std::size_t>(v)],
                                         var_sets[static_cast<std::size_t>(v)]);
      r.witness_world = slots.back().complement().min_element();
      return r;
    }
  }
  return {};
}

bool valid_on_frame(const Frame& f, const Formula& phi, int cap) {
  return check_validity(f, phi, cap).valid;
}

Partition theta_partition(const Model& m) {
  Partition base = induced_partition(m.frame.world_count(), m.valuation);
  return coarsest_tuned_refinement(m.frame, base);
}

bool subframe_validity(const Frame& f, const Formula& phi, int cap) {
  int n = f.world_count();
  int k = static_cast<int>(phi.variables().size());
  long long bits = static_cast<long long>(n) + static_cast<long long>(n) * k;
  if (bits > cap || bits >= 62)
    throw CapExceeded("subframe enumeration needs " + std::to_string(n) + " + " +
                      std::to_string(n) + " * " + std::to_string(k) +
                      " bits, cap is " + std::to_string(cap));
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    WorldSet ys(n);
    for (int w = 0; w < n; ++w)
      if ((mask >> w) & 1) ys.insert(w);
    if (!valid_on_frame(restriction(f, ys).frame, phi, cap)) return false;
  }
  return true;
}

bool relativized_box_reach(const Model& m, const Formula& xi, const Formula& phi,
                           int steps, int a) {
  if (steps < 0) throw InvalidArgument("step bound must be non-negative");
  if (!phi.modal_free()) throw InvalidArgument("reachability target must be modal-free");
  if (m.frame.modality_count() == 0)
    throw InvalidArgument("frame needs at least one modality");
  WorldSet v = evaluate(m, xi);
  if (a < 0 || a >= m.frame.world_count() || !v.contains(a))
    throw InvalidArgument("world must satisfy the relativizer");

  Alphabet designated({m.frame.alphabet().name(0)});
  Formula boxed = relativize(box_any_le(designated, steps, phi), xi);
  bool formula_side = evaluate(m, boxed).contains(a);

  Relation rv = m.frame.relation(0).restricted_to(v);
  WorldSet reach = star(rv).successors(a) & v;
  reach.insert(a);
  bool direct_side = reach.subset_of(evaluate(m, phi));
  return formula_side == direct_side;
}

}  // namespace framelab
