#include "framelab/partition.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace framelab {

namespace {

std::vector<int> index_worlds(int n, const std::vector<WorldSet>& blocks) {
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    blocks[b].for_each([&](int w) {
      if (idx[static_cast<std::size_t>(w)] != -1)
        throw InvalidArgument("partition blocks overlap");
      idx[static_cast<std::size_t>(w)] = static_cast<int>(b);
    });
  for (int w = 0; w < n; ++w)
    if (idx[static_cast<std::size_t>(w)] == -1)
      throw InvalidArgument("partition does not cover world " + std::to_string(w));
  return idx;
}

}  // namespace

Partition Partition::trivial(int n) {
  if (n == 0) return from_blocks(0, {});
  return from_blocks(n, {WorldSet::full(n)});
}

Partition Partition::discrete(int n) {
  std::vector<WorldSet> blocks;
  for (int w = 0; w < n; ++w) blocks.push_back(WorldSet::singleton(n, w));
  return from_blocks(n, std::move(blocks));
}

Partition Partition::from_blocks(int n, std::vector<WorldSet> blocks) {
  if (n < 0) throw InvalidArgument("world count must be non-negative");
  for (const auto& b : blocks) {
    if (b.universe() != n) throw InvalidArgument("partition block outside domain");
    if (b.empty()) throw InvalidArgument("partition blocks must be non-empty");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const WorldSet& a, const WorldSet& b) { return a.min_element() < b.min_element(); });
  Partition p;
  p.n_ = n;
  p.block_index_ = index_worlds(n, blocks);
  p.blocks_ = std::move(blocks);
  return p;
}

int Partition::block_of(int world) const {
  if (world < 0 || world >= n_) throw InvalidArgument("world outside partition domain");
  return block_index_[static_cast<std::size_t>(world)];
}

Partition induced_partition(int n, std::span<const WorldSet> sets) {
  for (const auto& s : sets)
    if (s.universe() != n) throw InvalidArgument("inducing set outside domain");
  std::map<std::vector<bool>, WorldSet> groups;
  for (int w = 0; w < n; ++w) {
    std::vector<bool> profile;
    profile.reserve(sets.size());
    for (const auto& s : sets) profile.push_back(s.contains(w));
    auto it = groups.find(profile);
    if (it == groups.end()) it = groups.emplace(std::move(profile), WorldSet(n)).first;
    it->second.insert(w);
  }
  std::vector<WorldSet> blocks;
  blocks.reserve(groups.size());
  for (auto& [_, b] : groups) blocks.push_back(std::move(b));
  return Partition::from_blocks(n, std::move(blocks));
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.universe() != coarse.universe())
    throw InvalidArgument("mismatched domains in refinement test");
  for (const auto& b : fine.blocks()) {
    int rep = b.min_element();
    if (!b.subset_of(coarse.block(coarse.block_of(rep)))) return false;
  }
  return true;
}

std::optional<TunedFailure> tuned_failure(const Frame& f, const Partition& v) {
  if (f.world_count() != v.universe())
    throw InvalidArgument("partition domain differs from frame domain");
  for (int d = 0; d < f.modality_count(); ++d) {
    const Relation& r = f.relation(d);
    for (int bu = 0; bu < v.block_count(); ++bu) {
      const WorldSet& u = v.block(bu);
      for (int bv = 0; bv < v.block_count(); ++bv) {
        WorldSet sources = r.preimage(v.block(bv));
        if (!sources.intersects(u)) continue;
        if (u.subset_of(sources)) continue;
        int witness = (u - sources).min_element();
        return TunedFailure{d, bu, bv, witness};
      }
    }
  }
  return std::nullopt;
}

bool is_tuned(const Frame& f, const Partition& v) { return !tuned_failure(f, v).has_value(); }

Partition coarsest_tuned_refinement(const Frame& f, const Partition& v) {
  if (f.world_count() != v.universe())
    throw InvalidArgument("partition domain differs from frame domain");
  Partition cur = v;
  for (;;) {
    // Signature of a world: which blocks it can reach, per modality.
    std::vector<WorldSet> reach;
    reach.reserve(static_cast<std::size_t>(f.modality_count() * cur.block_count()));
    for (int d = 0; d < f.modality_count(); ++d)
      for (int b = 0; b < cur.block_count(); ++b)
        reach.push_back(f.relation(d).preimage(cur.block(b)));

    std::vector<WorldSet> next_blocks;
    for (int b = 0; b < cur.block_count(); ++b) {
      std::map<std::vector<bool>, WorldSet> split;
      cur.block(b).for_each([&](int w) {
        std::vector<bool> sig;
        sig.reserve(reach.size());
        for (const auto& s : reach) sig.push_back(s.contains(w));
        auto it = split.find(sig);
        if (it == split.end()) it = split.emplace(std::move(sig), WorldSet(v.universe())).first;
        it->second.insert(w);
      });
      for (auto& [_, piece] : split) next_blocks.push_back(std::move(piece));
    }
    Partition next = Partition::from_blocks(v.universe(), std::move(next_blocks));
    if (next.block_count() == cur.block_count()) return cur;
    cur = std::move(next);
  }
}

SubsetFamily::SubsetFamily(int n, std::vector<WorldSet> members) : n_(n) {
  for (const auto& m : members)
    if (m.universe() != n) throw InvalidArgument("family member outside domain");
  std::sort(members.begin(), members.end(), lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool SubsetFamily::contains(const WorldSet& s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

std::vector<WorldSet> SubsetFamily::atoms() const {
  std::vector<WorldSet> out;
  for (const auto& a : members_) {
    if (a.empty()) continue;
    bool minimal = true;
    for (const auto& b : members_) {
      if (b.empty() || b == a) continue;
      if (b.subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

SubsetFamily subalgebra_closure(const Frame& f, std::span<const WorldSet> generators) {
  int n = f.world_count();
  for (const auto& g : generators)
    if (g.universe() != n) throw InvalidArgument("generator outside frame domain");

  std::unordered_set<WorldSet, WorldSetHash> seen;
  std::vector<WorldSet> members;
  std::vector<std::size_t> work;
  auto add = [&](const WorldSet& s) {
    if (seen.insert(s).second) {
      members.push_back(s);
      work.push_back(members.size() - 1);
    }
  };

  add(WorldSet(n));
  for (const auto& g : generators) add(g);

  while (!work.empty()) {
    std::size_t i = work.back();
    work.pop_back();
    WorldSet s = members[i];
    add(s.complement());
    for (int d = 0; d < f.modality_count(); ++d) add(f.relation(d).preimage(s));
    for (std::size_t j = 0; j < members.size(); ++j) add(s | members[j]);
  }
  return SubsetFamily(n, std::move(members));
}

SubsetFamily subalgebra_from_partition(const Partition& v, int max_blocks) {
  if (v.block_count() > max_blocks)
    throw CapExceeded("partition has too many blocks to enumerate unions");
  int n = v.universe();
  std::vector<WorldSet> members;
  members.reserve(1ULL << v.block_count());
  for (std::uint64_t mask = 0; mask < (1ULL << v.block_count()); ++mask) {
    WorldSet s(n);
    for (int b = 0; b < v.block_count(); ++b)
      if ((mask >> b) & 1) s |= v.block(b);
    members.push_back(std::move(s));
  }
  return SubsetFamily(n, std::move(members));
}

namespace {

// Enumerates partitions of {0,...,n-1} via restricted growth strings,
// invoking the callback with block sets. Returns false if the budget ran
// out.
template <class F>
bool enumerate_partitions(int n, long long budget, F callback) {
  if (n == 0) {
    callback(std::vector<WorldSet>{});
    return true;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  long long used = 0;
  for (;;) {
    if (++used > budget) return false;
    int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<WorldSet> bs(static_cast<std::size_t>(blocks), WorldSet(n));
    for (int w = 0; w < n; ++w) bs[static_cast<std::size_t>(rgs[static_cast<std::size_t>(w)])].insert(w);
    callback(bs);

    // Next restricted growth string.
    int i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(i)] <= prefix_max) break;
      --i;
    }
    if (i == 0) return true;
    ++rgs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
    continue;
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n, long long budget) {
  std::vector<Partition> out;
  bool ok = enumerate_partitions(n, budget, [&](const std::vector<WorldSet>& blocks) {
    out.push_back(Partition::from_blocks(n, blocks));
  });
  if (!ok) throw CapExceeded("partition enumeration budget exceeded");
  return out;
}

int tunability_profile(const Frame& f, int k, long long budget) {
  if (k < 0) throw InvalidArgument("variable count must be non-negative");
  int n = f.world_count();
  long long max_blocks = k >= 20 ? (1LL << 20) : (1LL << k);
  int best = 0;
  bool ok = enumerate_partitions(n, budget, [&](const std::vector<WorldSet>& blocks) {
    if (static_cast<long long>(blocks.size()) > max_blocks) return;
    Partition v = Partition::from_blocks(n, blocks);
    best = std::max(best, coarsest_tuned_refinement(f, v).block_count());
  });
  if (!ok) throw CapExceeded("partition enumeration budget exceeded");
  return best;
}

}  // namespace framelab
