#include "framelab/generate.hpp"

#include <algorithm>

namespace framelab {

int uniform_int(Rng& rng, int lo, int hi) {
  if (lo > hi) throw InvalidArgument("empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

bool bernoulli(Rng& rng, double p) {
  return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
}

WorldSet random_subset(Rng& rng, int n, double density) {
  WorldSet s(n);
  for (int w = 0; w < n; ++w)
    if (bernoulli(rng, density)) s.insert(w);
  return s;
}

Relation random_relation(Rng& rng, int n, double density) {
  Relation r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (bernoulli(rng, density)) r.insert(a, b);
  return r;
}

Partition random_partition(Rng& rng, int n) {
  if (n == 0) return Partition::trivial(0);
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  int max_used = 0;
  for (int w = 1; w < n; ++w) {
    rgs[static_cast<std::size_t>(w)] = uniform_int(rng, 0, max_used + 1);
    max_used = std::max(max_used, rgs[static_cast<std::size_t>(w)]);
  }
  std::vector<WorldSet> blocks(static_cast<std::size_t>(max_used + 1), WorldSet(n));
  for (int w = 0; w < n; ++w) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(w)])].insert(w);
  return Partition::from_blocks(n, std::move(blocks));
}

Frame random_frame(Rng& rng, const Alphabet& alphabet, int n, double density) {
  Frame f(alphabet, n);
  for (int d = 0; d < alphabet.size(); ++d) f.relation_mut(d) = random_relation(rng, n, density);
  return f;
}

Formula random_formula(Rng& rng, const Alphabet& alphabet, int variable_bound, int depth) {
  bool leaf_only = depth <= 0;
  int pick = uniform_int(rng, 0, leaf_only ? 1 : 7);
  switch (pick) {
    case 0:
      return Formula::bottom();
    case 1:
      return variable_bound > 0 ? Formula::var(uniform_int(rng, 0, variable_bound - 1))
                                : Formula::top();
    case 2:
      return Formula::negation(random_formula(rng, alphabet, variable_bound, depth - 1));
    case 3:
      return Formula::implies(random_formula(rng, alphabet, variable_bound, depth - 1),
                              random_formula(rng, alphabet, variable_bound, depth - 1));
    case 4:
      return Formula::conj(random_formula(rng, alphabet, variable_bound, depth - 1),
                           random_formula(rng, alphabet, variable_bound, depth - 1));
    case 5:
      return Formula::disj(random_formula(rng, alphabet, variable_bound, depth - 1),
                           random_formula(rng, alphabet, variable_bound, depth - 1));
    case 6: {
      int d = uniform_int(rng, 0, alphabet.size() - 1);
      return Formula::diamond(alphabet.name(d),
                              random_formula(rng, alphabet, variable_bound, depth - 1));
    }
    default: {
      int d = uniform_int(rng, 0, alphabet.size() - 1);
      return Formula::box(alphabet.name(d),
                          random_formula(rng, alphabet, variable_bound, depth - 1));
    }
  }
}

Alphabet generated_alphabet(int modalities) {
  std::vector<std::string> names;
  for (int d = 0; d < modalities; ++d) names.push_back(std::string(1, static_cast<char>('a' + d)));
  return Alphabet(std::move(names));
}

std::vector<Frame> generate_frames(const ExperimentConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<Frame> out;
  out.reserve(static_cast<std::size_t>(cfg.frame_count));
  const double steps[3] = {0.5, 1.0, 1.6};
  for (int i = 0; i < cfg.frame_count; ++i) {
    int n = i % (cfg.world_bound + 1);
    int mods = 1 + i % std::max(1, cfg.modality_bound);
    double density = std::min(1.0, cfg.density * steps[i % 3]);
    out.push_back(random_frame(rng, generated_alphabet(mods), n, density));
  }
  return out;
}

}  // namespace framelab
