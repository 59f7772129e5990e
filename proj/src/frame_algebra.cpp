#include "framelab/frame_algebra.hpp"

#include <algorithm>
#include <map>

namespace framelab {

namespace {

SumFrame assemble(const Alphabet& alphabet, std::span<const Frame> summands) {
  SumFrame s;
  int total = 0;
  for (const auto& f : summands) {
    s.layout.emplace_back(total, f.world_count());
    total += f.world_count();
  }
  s.frame = Frame(alphabet, total);
  s.index_of.assign(static_cast<std::size_t>(total), -1);
  s.inner_of.assign(static_cast<std::size_t>(total), -1);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    auto [off, len] = s.layout[i];
    for (int a = 0; a < len; ++a) {
      s.index_of[static_cast<std::size_t>(off + a)] = static_cast<int>(i);
      s.inner_of[static_cast<std::size_t>(off + a)] = a;
    }
  }
  return s;
}

void check_common_alphabet(std::span<const Frame> summands, const Alphabet& alphabet) {
  for (const auto& f : summands)
    if (!(f.alphabet() == alphabet))
      throw InvalidArgument("summands must share one alphabet");
}

}  // namespace

SumFrame disjoint_sum(std::span<const Frame> summands) {
  if (summands.empty()) throw InvalidArgument("disjoint sum needs at least one summand");
  const Alphabet& alphabet = summands.front().alphabet();
  check_common_alphabet(summands, alphabet);
  SumFrame s = assemble(alphabet, summands);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    auto [off, len] = s.layout[i];
    for (int d = 0; d < alphabet.size(); ++d)
      for (auto [a, b] : summands[i].relation(d).pairs())
        s.frame.relation_mut(d).insert(off + a, off + b);
  }
  return s;
}

SumFrame sum_over_index(const Frame& index, std::span<const Frame> summands) {
  if (index.world_count() != static_cast<int>(summands.size()))
    throw InvalidArgument("index needs one world per summand");
  const Alphabet& alphabet = index.alphabet();
  check_common_alphabet(summands, alphabet);
  SumFrame s = assemble(alphabet, summands);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    auto [off, len] = s.layout[i];
    (void)len;
    for (int d = 0; d < alphabet.size(); ++d)
      for (auto [a, b] : summands[i].relation(d).pairs())
        s.frame.relation_mut(d).insert(off + a, off + b);
  }
  for (int d = 0; d < alphabet.size(); ++d) {
    for (auto [i, j] : index.relation(d).pairs()) {
      if (i == j) continue;
      auto [ioff, ilen] = s.layout[static_cast<std::size_t>(i)];
      auto [joff, jlen] = s.layout[static_cast<std::size_t>(j)];
      for (int a = 0; a < ilen; ++a)
        for (int b = 0; b < jlen; ++b)
          s.frame.relation_mut(d).insert(ioff + a, joff + b);
    }
  }
  return s;
}

namespace {

Alphabet combine(const Alphabet& vertical, const Alphabet& horizontal) {
  std::vector<std::string> names = vertical.names;
  names.insert(names.end(), horizontal.names.begin(), horizontal.names.end());
  return Alphabet(std::move(names));  // rejects overlaps as duplicates
}

}  // namespace

SumFrame lex_sum(const Frame& index, std::span<const Frame> summands) {
  if (index.world_count() != static_cast<int>(summands.size()))
    throw InvalidArgument("index needs one world per summand");
  if (summands.empty()) throw InvalidArgument("lexicographic sum needs at least one summand");
  const Alphabet& vertical = index.alphabet();
  const Alphabet& horizontal = summands.front().alphabet();
  check_common_alphabet(summands, horizontal);
  Alphabet alphabet = combine(vertical, horizontal);

  SumFrame s = assemble(alphabet, summands);
  for (int d = 0; d < vertical.size(); ++d) {
    for (auto [i, j] : index.relation(d).pairs()) {
      auto [ioff, ilen] = s.layout[static_cast<std::size_t>(i)];
      auto [joff, jlen] = s.layout[static_cast<std::size_t>(j)];
      for (int a = 0; a < ilen; ++a)
        for (int b = 0; b < jlen; ++b)
          s.frame.relation_mut(d).insert(ioff + a, joff + b);
    }
  }
  for (int d = 0; d < horizontal.size(); ++d) {
    for (std::size_t i = 0; i < summands.size(); ++i) {
      auto [off, len] = s.layout[i];
      (void)len;
      for (auto [a, b] : summands[i].relation(d).pairs())
        s.frame.relation_mut(vertical.size() + d).insert(off + a, off + b);
    }
  }
  return s;
}

SumFrame lex_as_sum(const Frame& index, std::span<const Frame> summands) {
  if (index.world_count() != static_cast<int>(summands.size()))
    throw InvalidArgument("index needs one world per summand");
  if (summands.empty()) throw InvalidArgument("lexicographic sum needs at least one summand");
  const Alphabet& vertical = index.alphabet();
  const Alphabet& horizontal = summands.front().alphabet();
  check_common_alphabet(summands, horizontal);
  Alphabet alphabet = combine(vertical, horizontal);

  Frame wide_index(alphabet, index.world_count());
  for (int d = 0; d < vertical.size(); ++d) wide_index.relation_mut(d) = index.relation(d);

  std::vector<Frame> wide;
  wide.reserve(summands.size());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    int n = summands[i].world_count();
    Frame g(alphabet, n);
    for (int d = 0; d < vertical.size(); ++d) {
      if (index.relation(d).contains(static_cast<int>(i), static_cast<int>(i)))
        g.relation_mut(d) = Relation::full(n);
    }
    for (int d = 0; d < horizontal.size(); ++d)
      g.relation_mut(vertical.size() + d) = summands[i].relation(d);
    wide.push_back(std::move(g));
  }
  return sum_over_index(wide_index, wide);
}

Partition footprint_partition(const SumFrame& s, const Partition& v) {
  if (v.universe() != s.frame.world_count())
    throw InvalidArgument("sum partition outside sum domain");
  int count = s.summand_count();
  std::map<std::vector<int>, WorldSet> groups;
  for (int i = 0; i < count; ++i) {
    auto [off, len] = s.layout[static_cast<std::size_t>(i)];
    std::vector<int> fp;
    for (int a = 0; a < len; ++a) fp.push_back(v.block_of(off + a));
    std::sort(fp.begin(), fp.end());
    fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
    groups.try_emplace(std::move(fp), WorldSet(count)).first->second.insert(i);
  }
  std::vector<WorldSet> blocks;
  blocks.reserve(groups.size());
  for (auto& [fp, b] : groups) blocks.push_back(std::move(b));
  return Partition::from_blocks(count, std::move(blocks));
}

Partition transfer_partition(const SumFrame& s, const Frame& index, const Partition& v,
                             const Partition& u) {
  int n = s.frame.world_count();
  if (v.universe() != n) throw InvalidArgument("sum partition outside sum domain");
  if (index.world_count() != s.summand_count())
    throw InvalidArgument("index does not match the sum layout");
  if (u.universe() != index.world_count())
    throw InvalidArgument("index partition outside index domain");

  // Rebuild the disjoint sum (drop the cross edges) for the first check.
  Frame diag(s.frame.alphabet(), n);
  for (int d = 0; d < s.frame.modality_count(); ++d)
    for (auto [a, b] : s.frame.relation(d).pairs())
      if (s.index_of[static_cast<std::size_t>(a)] == s.index_of[static_cast<std::size_t>(b)])
        diag.relation_mut(d).insert(a, b);
  if (auto fail = tuned_failure(diag, v))
    throw InvalidArgument(
        "sum partition is not tuned in the disjoint sum (modality " +
        s.frame.alphabet().name(fail->modality) + ", block " + std::to_string(fail->block_u) +
        " against block " + std::to_string(fail->block_v) + ", world " +
        std::to_string(fail->element) + " has no edge)");

  if (auto fail = tuned_failure(irreflexive_part(index), u))
    throw InvalidArgument(
        "index partition is not tuned in the loop-free index (modality " +
        index.alphabet().name(fail->modality) + ", block " + std::to_string(fail->block_u) +
        " against block " + std::to_string(fail->block_v) + ", world " +
        std::to_string(fail->element) + " has no edge)");

  // Footprint of an index world: the v-blocks meeting its summand.
  std::vector<WorldSet> footprints;
  for (int i = 0; i < index.world_count(); ++i) {
    WorldSet fp(v.block_count());
    auto [off, len] = s.layout[static_cast<std::size_t>(i)];
    for (int a = 0; a < len; ++a) fp.insert(v.block_of(off + a));
    footprints.push_back(std::move(fp));
  }
  for (const auto& block : u.blocks()) {
    int rep = block.min_element();
    bool uniform = true;
    block.for_each([&](int i) {
      if (!(footprints[static_cast<std::size_t>(i)] == footprints[static_cast<std::size_t>(rep)]))
        uniform = false;
    });
    if (!uniform)
      throw InvalidArgument("index partition must refine the footprint partition");
  }

  std::map<std::pair<int, int>, WorldSet> groups;
  for (int w = 0; w < n; ++w) {
    std::pair<int, int> key{v.block_of(w), u.block_of(s.index_of[static_cast<std::size_t>(w)])};
    auto it = groups.find(key);
    if (it == groups.end()) it = groups.emplace(key, WorldSet(n)).first;
    it->second.insert(w);
  }
  std::vector<WorldSet> blocks;
  blocks.reserve(groups.size());
  for (auto& [_, b] : groups) blocks.push_back(std::move(b));
  return Partition::from_blocks(n, std::move(blocks));
}

std::optional<PmorphismFailure> pmorphism_failure(const WorldMap& m) {
  if (!(m.domain.alphabet() == m.codomain.alphabet()))
    throw InvalidArgument("world map requires matching alphabets");
  if (static_cast<int>(m.map.size()) != m.domain.world_count())
    throw InvalidArgument("world map must cover the domain");
  for (int a = 0; a < m.domain.world_count(); ++a)
    if (m.map[static_cast<std::size_t>(a)] < 0 ||
        m.map[static_cast<std::size_t>(a)] >= m.codomain.world_count())
      throw InvalidArgument("world map image outside codomain");

  for (int d = 0; d < m.domain.modality_count(); ++d) {
    const Relation& r = m.domain.relation(d);
    const Relation& sr = m.codomain.relation(d);
    const std::string& name = m.domain.alphabet().name(d);
    for (auto [a, b] : r.pairs()) {
      int fa = m.map[static_cast<std::size_t>(a)], fb = m.map[static_cast<std::size_t>(b)];
      if (!sr.contains(fa, fb))
        return PmorphismFailure{"edge (" + std::to_string(a) + "," + std::to_string(b) +
                                ") over '" + name + "' maps to missing edge (" +
                                std::to_string(fa) + "," + std::to_string(fb) + ")"};
    }
    for (int a = 0; a < m.domain.world_count(); ++a) {
      int fa = m.map[static_cast<std::size_t>(a)];
      WorldSet targets = sr.successors(fa);
      WorldSet reached(m.codomain.world_count());
      r.successors(a).for_each(
          [&](int b) { reached.insert(m.map[static_cast<std::size_t>(b)]); });
      if (!targets.subset_of(reached)) {
        int u = (targets - reached).min_element();
        return PmorphismFailure{"edge from image of " + std::to_string(a) + " to " +
                                std::to_string(u) + " over '" + name +
                                "' has no lift"};
      }
    }
  }
  return std::nullopt;
}

bool is_pmorphism(const WorldMap& m) { return !pmorphism_failure(m).has_value(); }

std::optional<PhiConditionFailure> phi_condition_failure(const Frame& f,
                                                         const Alphabet& vertical,
                                                         const Alphabet& horizontal) {
  for (const auto& name : vertical.names) f.alphabet().require(name);
  for (const auto& name : horizontal.names) f.alphabet().require(name);
  for (const auto& v : vertical.names) {
    const Relation& rv = f.relation(v);
    for (const auto& h : horizontal.names) {
      const Relation& rh = f.relation(h);
      struct Case {
        int id;
        Relation lhs;
      };
      Case cases[] = {{1, compose(rh, rv)},
                      {2, compose(rv, rh)},
                      {3, compose(rh.transpose(), rv)}};
      for (const auto& c : cases) {
        if (!c.lhs.subset_of(rv)) {
          Relation extra = c.lhs - rv;
          return PhiConditionFailure{v, h, c.id, extra.pairs().front()};
        }
      }
    }
  }
  return std::nullopt;
}

bool phi_conditions(const Frame& f, const Alphabet& vertical, const Alphabet& horizontal) {
  return !phi_condition_failure(f, vertical, horizontal).has_value();
}

namespace {

Relation alphabet_union(const Frame& f, const Alphabet& part) {
  Relation r(f.world_count());
  for (const auto& name : part.names) r |= f.relation(name);
  return r;
}

}  // namespace

bool composition_splits(const Frame& f, const Alphabet& vertical, const Alphabet& horizontal) {
  Relation v = alphabet_union(f, vertical);
  Relation h = alphabet_union(f, horizontal);
  return star(v | h) == compose(star(v), star(h));
}

std::optional<int> find_root(const Frame& f) {
  Relation reach = star(union_relation(f));
  WorldSet all = WorldSet::full(f.world_count());
  for (int a = 0; a < f.world_count(); ++a)
    if (reach.successors(a) == all) return a;
  return std::nullopt;
}

CoverResult oplus_cover(const Frame& f, const Alphabet& vertical, const Alphabet& horizontal,
                        int root) {
  if (root < 0 || root >= f.world_count())
    throw InvalidArgument("root outside frame domain");
  if (vertical.size() + horizontal.size() != f.modality_count())
    throw InvalidArgument("vertical and horizontal parts must split the frame's alphabet");
  for (const auto& name : f.alphabet().names)
    if (vertical.index_of(name) < 0 && horizontal.index_of(name) < 0)
      throw InvalidArgument("modality '" + name + "' missing from the split");
  if (auto fail = phi_condition_failure(f, vertical, horizontal))
    throw InvalidArgument("frame violates the interaction conditions ('" + fail->vertical +
                          "'/'" + fail->horizontal + "', condition " +
                          std::to_string(fail->condition) + ")");
  {
    Relation reach = star(union_relation(f));
    if (!(reach.successors(root) == WorldSet::full(f.world_count())))
      throw InvalidArgument("root does not reach every world");
  }

  // Vertical reduct cone at the root.
  Frame vf(vertical, f.world_count());
  for (int d = 0; d < vertical.size(); ++d) vf.relation_mut(d) = f.relation(vertical.name(d));
  WorldSet icone = star(union_relation(vf)).successors(root);
  Restriction ir = restriction(vf, icone);
  std::vector<int> index_worlds = icone.elements();  // new index world -> original

  // Horizontal reduct cone at each index world.
  Frame hf(horizontal, f.world_count());
  for (int d = 0; d < horizontal.size(); ++d)
    hf.relation_mut(d) = f.relation(horizontal.name(d));
  Relation hreach = star(union_relation(hf));

  std::vector<Frame> summands;
  std::vector<std::vector<int>> summand_worlds;  // summand inner -> original
  for (int i : index_worlds) {
    WorldSet cone = hreach.successors(i);
    Restriction hr = restriction(hf, cone);
    summands.push_back(std::move(hr.frame));
    summand_worlds.push_back(cone.elements());
  }

  CoverResult out;
  out.cover = lex_sum(ir.frame, summands);
  out.map.assign(static_cast<std::size_t>(out.cover.frame.world_count()), -1);
  for (int w = 0; w < out.cover.frame.world_count(); ++w) {
    int i = out.cover.index_of[static_cast<std::size_t>(w)];
    int a = out.cover.inner_of[static_cast<std::size_t>(w)];
    out.map[static_cast<std::size_t>(w)] =
        summand_worlds[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
  }

  // The cover's alphabet lists vertical names first; reorder to f's.
  Frame comparable(f.alphabet(), out.cover.frame.world_count());
  for (int d = 0; d < f.modality_count(); ++d)
    comparable.relation_mut(d) = out.cover.frame.relation(f.alphabet().name(d));
  out.cover.frame = std::move(comparable);

  out.pmorphism = is_pmorphism(WorldMap{out.cover.frame, f, out.map});
  WorldSet image(f.world_count());
  for (int w : out.map) image.insert(w);
  out.surjective = image == WorldSet::full(f.world_count());
  out.composition_identity = composition_splits(f, vertical, horizontal);
  return out;
}

}  // namespace framelab
