#include <doctest.h>

#include "framelab/generate.hpp"

using framelab::ExperimentConfig;
using framelab::Frame;

TEST_CASE("generation is deterministic under the seed") {
  ExperimentConfig cfg;
  cfg.frame_count = 40;
  std::vector<Frame> a = framelab::generate_frames(cfg);
  std::vector<Frame> b = framelab::generate_frames(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  cfg.seed += 1;
  std::vector<Frame> c = framelab::generate_frames(cfg);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == c[i])) all_equal = false;
  CHECK(!all_equal);
}

TEST_CASE("density endpoints") {
  framelab::Rng rng(1);
  Frame empty = framelab::random_frame(rng, framelab::Alphabet({"a", "b"}), 4, 0.0);
  for (int d = 0; d < 2; ++d) CHECK(empty.relation(d).is_empty());

  Frame full = framelab::random_frame(rng, framelab::Alphabet({"a"}), 4, 1.0);
  CHECK(full.relation(0) == framelab::Relation::full(4));
}

TEST_CASE("generated corpus respects the bounds") {
  ExperimentConfig cfg;
  cfg.frame_count = 60;
  cfg.world_bound = 4;
  cfg.modality_bound = 2;
  for (const Frame& f : framelab::generate_frames(cfg)) {
    CHECK(f.world_count() <= 4);
    CHECK(f.modality_count() >= 1);
    CHECK(f.modality_count() <= 2);
  }
}

TEST_CASE("random formulas respect variable and depth bounds") {
  framelab::Rng rng(5);
  framelab::Alphabet ab({"a"});
  for (int trial = 0; trial < 400; ++trial) {
    framelab::Formula phi = framelab::random_formula(rng, ab, 2, 3);
    CHECK(phi.modal_depth() <= 3);
    for (int v : phi.variables()) CHECK(v < 2);
  }
}
