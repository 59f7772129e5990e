#include "framelab/defect.hpp"

#include <algorithm>
#include <map>

namespace framelab {

WorldSet defects(const Relation& r, const WorldSet& u) {
  if (u.universe() != r.universe())
    throw InvalidArgument("defect domain must live in the relation's domain");
  Relation inner = r.restricted_to(u);
  if (inner.is_empty()) return WorldSet(u.universe());
  WorldSet out(u.universe());
  u.for_each([&](int c) {
    if (inner.successors(c).empty()) out.insert(c);
  });
  return out;
}

namespace {

bool canonical_before(const WorldSet& a, const WorldSet& b) {
  if (a.min_element() != b.min_element()) return a.min_element() < b.min_element();
  if (a.count() != b.count()) return a.count() < b.count();
  return lex_less(a, b);
}

// R_V^*(a): a plus everything reachable from a inside v.
WorldSet cone_within(const Relation& r, const WorldSet& v, int a) {
  WorldSet out = star(r.restricted_to(v)).successors(a) & v;
  out.insert(a);
  return out;
}

}  // namespace

QesTrace run_qes(const Frame& f, const std::string& designated,
                 std::span<const WorldSet> generators) {
  int n = f.world_count();
  for (const auto& g : generators)
    if (g.universe() != n) throw InvalidArgument("generator outside frame domain");

  QesTrace t;
  t.frame = f;
  t.designated = f.alphabet().require(designated);
  t.closed = f;
  t.closed.relation_mut(t.designated) = f.relation(t.designated).reflexive_closure();
  t.generators.assign(generators.begin(), generators.end());

  const Relation& r = f.relation(t.designated);

  // Refinement loop. Each nonempty defect set is disjoint from the
  // previous ones, so the loop ends within n stages.
  std::vector<WorldSet> sets(generators.begin(), generators.end());
  t.defect_union = WorldSet(n);
  t.stage_of.assign(static_cast<std::size_t>(n), -1);
  for (int stage = 0;; ++stage) {
    Partition part = coarsest_tuned_refinement(t.closed, induced_partition(n, sets));
    WorldSet q(n);
    for (const auto& block : part.blocks()) q |= defects(r, block);
    q.for_each([&](int w) { t.stage_of[static_cast<std::size_t>(w)] = stage; });
    t.defect_union |= q;
    t.stages.push_back({std::move(part), q});
    if (q.empty()) break;
    if (stage > n)
      throw InvalidArgument("refinement failed to terminate; this is a bug");
    sets.push_back(std::move(q));
  }

  // Class family across all stages, with defect sets.
  for (const auto& stage : t.stages)
    for (const auto& block : stage.partition.blocks())
      if (std::find(t.class_family.begin(), t.class_family.end(), block) ==
          t.class_family.end())
        t.class_family.push_back(block);
  std::sort(t.class_family.begin(), t.class_family.end(), canonical_before);

  std::vector<WorldSet> class_defects;
  class_defects.reserve(t.class_family.size());
  for (const auto& v : t.class_family) class_defects.push_back(defects(r, v));

  // Rank of a defect world: how many strictly larger classes have a
  // defect reachable in one step from the world's own class.
  t.rank_of.assign(static_cast<std::size_t>(n), -1);
  t.even_rank = WorldSet(n);
  t.defect_union.for_each([&](int a) {
    int stage = t.stage_of[static_cast<std::size_t>(a)];
    const Partition& part = t.stages[static_cast<std::size_t>(stage)].partition;
    const WorldSet& own = part.block(part.block_of(a));
    int rank = 0;
    for (std::size_t ci = 0; ci < t.class_family.size(); ++ci) {
      const WorldSet& v = t.class_family[ci];
      if (!(own.subset_of(v)) || own == v) continue;
      if (class_defects[ci].empty()) continue;
      bool edge = false;
      own.for_each([&](int x) {
        if (!edge && r.successors(x).intersects(class_defects[ci])) edge = true;
      });
      if (edge) ++rank;
    }
    t.rank_of[static_cast<std::size_t>(a)] = rank;
    if (rank % 2 == 0) t.even_rank.insert(a);
  });

  // Defective classes and their residue clusters.
  for (int stage = 0; stage <= t.stage_count(); ++stage) {
    const Partition& part = t.stages[static_cast<std::size_t>(stage)].partition;
    for (const auto& block : part.blocks()) {
      WorldSet def = defects(r, block);
      if (def.empty()) continue;
      DefectiveClass dc;
      dc.members = block;
      dc.stage = stage;
      dc.defect_members = def;
      dc.residue = (block - t.stages[static_cast<std::size_t>(stage)].defects) & t.defect_union;
      for (const auto& c : clusters_of(r, dc.residue))
        if (c.maximal) dc.maximal_clusters.push_back(c.members);
      t.defective_classes.push_back(std::move(dc));
    }
  }

  // Cluster family: maximal residue clusters of size > 1, deduplicated.
  for (const auto& dc : t.defective_classes)
    for (const auto& c : dc.maximal_clusters)
      if (c.count() > 1 &&
          std::find(t.cluster_family.begin(), t.cluster_family.end(), c) ==
              t.cluster_family.end())
        t.cluster_family.push_back(c);
  std::sort(t.cluster_family.begin(), t.cluster_family.end(), canonical_before);

  t.cluster_minimal.assign(t.cluster_family.size(), true);
  for (std::size_t i = 0; i < t.cluster_family.size(); ++i)
    for (std::size_t j = 0; j < t.cluster_family.size(); ++j)
      if (i != j && t.cluster_family[j].subset_of(t.cluster_family[i]))
        t.cluster_minimal[i] = false;

  t.picks_first = WorldSet(n);
  t.picks_second = WorldSet(n);
  std::vector<WorldSet> ungrounded;
  for (std::size_t i = 0; i < t.cluster_family.size(); ++i) {
    bool grounded = false;
    for (std::size_t j = 0; j < t.cluster_family.size(); ++j)
      if (t.cluster_minimal[j] && t.cluster_family[j].subset_of(t.cluster_family[i]))
        grounded = true;
    if (!grounded) ungrounded.push_back(t.cluster_family[i]);
    if (t.cluster_minimal[i]) {
      auto xs = t.cluster_family[i].elements();
      t.picks_first.insert(xs[0]);
      t.picks_second.insert(xs[1]);
    }
  }
  // Every cluster of a finite trace contains a minimal cluster.
  if (!ungrounded.empty())
    throw InvalidArgument("finite trace produced a non-grounded cluster; this is a bug");
  auto [nested_first, nested_second] = pick_nested_separators(n, ungrounded);
  t.nested_first = nested_first;
  t.nested_second = nested_second;
  t.separator = t.picks_first | t.nested_first;
  return t;
}

std::optional<std::string> verify_main_claim(const QesTrace& t) {
  const Relation& r = t.frame.relation(t.designated);
  const WorldSet& q = t.defect_union;
  const WorldSet& e = t.even_rank;
  const WorldSet& s = t.separator;
  WorldSet not_e = e.complement();
  WorldSet not_s = s.complement();
  for (const auto& dc : t.defective_classes) {
    auto fail = std::optional<std::string>{};
    dc.members.for_each([&](int a) {
      if (fail) return;
      WorldSet cone = cone_within(r, dc.members, a);
      bool rhs = cone.subset_of(q) &&
                 (cone.subset_of(e) || cone.subset_of(not_e)) &&
                 (cone.subset_of(s) || cone.subset_of(not_s));
      bool lhs = dc.defect_members.contains(a);
      if (lhs != rhs)
        fail = "world " + std::to_string(a) + " of class " + dc.members.to_string() +
               " (stage " + std::to_string(dc.stage) + "): defect=" +
               (lhs ? "yes" : "no") + " but characterization says " + (rhs ? "yes" : "no");
    });
    if (fail) return fail;
  }
  return std::nullopt;
}

bool verify_embedding(const QesTrace& t) {
  SubsetFamily small = subalgebra_closure(t.frame, t.generators);
  std::vector<WorldSet> extended = t.generators;
  extended.push_back(t.defect_union);
  extended.push_back(t.even_rank);
  extended.push_back(t.separator);
  SubsetFamily large = subalgebra_closure(t.closed, extended);
  for (const auto& m : small.members())
    if (!large.contains(m)) return false;
  return true;
}

bool verify_final_partition(const QesTrace& t) {
  const Relation& r = t.frame.relation(t.designated);
  const Partition& last = t.final_partition();
  for (const auto& block : last.blocks())
    if (!defects(r, block).empty()) return false;
  return is_tuned(t.frame, last);
}

std::pair<WorldSet, WorldSet> pick_nested_separators(int n,
                                                     std::span<const WorldSet> family) {
  for (const auto& c : family) {
    if (c.universe() != n) throw InvalidArgument("cluster outside domain");
    for (const auto& d : family)
      if (!(c == d) && c.intersects(d) && !c.subset_of(d) && !d.subset_of(c))
        throw InvalidArgument("cluster family is not laminar");
  }

  // Outermost first: order by the number of strict supersets.
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < family.size(); ++i) {
    int above = 0;
    for (std::size_t j = 0; j < family.size(); ++j)
      if (i != j && family[i].subset_of(family[j])) ++above;
    order.emplace_back(above, i);
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (a.first != b.first) return a.first < b.first;
    return canonical_before(family[a.second], family[b.second]);
  });

  WorldSet first(n), second(n);
  std::vector<std::pair<WorldSet, std::pair<int, int>>> picked;  // set -> its two picks
  for (auto [above, i] : order) {
    WorldSet avail = family[i];
    for (const auto& [outer, picks] : picked) {
      if (family[i].subset_of(outer)) {
        avail.erase(picks.first);
        avail.erase(picks.second);
      }
    }
    auto xs = avail.elements();
    if (xs.size() < 2)
      throw InvalidArgument("cluster " + family[i].to_string() +
                            " has fewer than two unclaimed worlds");
    first.insert(xs[0]);
    second.insert(xs[1]);
    picked.emplace_back(family[i], std::make_pair(xs[0], xs[1]));
  }
  return {first, second};
}

IteratedQes run_qes_iterated(const Frame& f, std::span<const WorldSet> generators) {
  IteratedQes out;
  out.final_frame = f;
  out.final_generators.assign(generators.begin(), generators.end());
  for (int d = 0; d < f.modality_count(); ++d) {
    QesTrace t = run_qes(out.final_frame, f.alphabet().name(d), out.final_generators);
    out.final_generators.push_back(t.defect_union);
    out.final_generators.push_back(t.even_rank);
    out.final_generators.push_back(t.separator);
    out.final_frame = t.closed;
    out.traces.push_back(std::move(t));
  }
  SubsetFamily small = subalgebra_closure(f, generators);
  SubsetFamily large = subalgebra_closure(out.final_frame, out.final_generators);
  out.embedding_ok = true;
  for (const auto& m : small.members())
    if (!large.contains(m)) out.embedding_ok = false;
  return out;
}

}  // namespace framelab
