#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "framelab/formula.hpp"
#include "framelab/partition.hpp"

namespace framelab {

// Knobs for the generated test corpora. Everything a suite does is a
// deterministic function of this struct.
struct ExperimentConfig {
  std::uint64_t seed = 20240811;
  int frame_count = 100;
  int world_bound = 5;      // world counts cycle 0..world_bound
  int modality_bound = 2;   // alphabets cycle 1..modality_bound names
  double density = 0.3;     // per-pair edge probability
  int variable_bound = 2;
  int depth_bound = 3;
  int cap = 22;
};

// All randomness flows through one seeded engine; the helpers below avoid
// distribution classes so that sequences are identical across platforms.
using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);
bool bernoulli(Rng& rng, double p);

WorldSet random_subset(Rng& rng, int n, double density = 0.5);
Relation random_relation(Rng& rng, int n, double density);
Partition random_partition(Rng& rng, int n);
Frame random_frame(Rng& rng, const Alphabet& alphabet, int n, double density);
Formula random_formula(Rng& rng, const Alphabet& alphabet, int variable_bound, int depth);

// Deterministic corpus: world counts cycle through 0..world_bound,
// alphabet sizes through 1..modality_bound, densities through three
// steps around cfg.density; edges are drawn from the seeded engine.
std::vector<Frame> generate_frames(const ExperimentConfig& cfg);

// Alphabet used by generated frames: "a", "b", ...
Alphabet generated_alphabet(int modalities);

}  // namespace framelab
