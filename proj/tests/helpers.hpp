#pragma once

#include <utility>
#include <vector>

#include "framelab/frame.hpp"

namespace testutil {

// Single-modality frame named "a" with the given edges.
inline framelab::Frame uni(int n, const std::vector<std::pair<int, int>>& edges) {
  framelab::Frame f(framelab::Alphabet({"a"}), n);
  for (auto [x, y] : edges) f.relation_mut(0).insert(x, y);
  return f;
}

// Irreflexive successor chain 0 -> 1 -> ... -> n-1.
inline framelab::Frame chain(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w + 1 < n; ++w) edges.emplace_back(w, w + 1);
  return uni(n, edges);
}

inline framelab::Frame full_frame(int n) {
  framelab::Frame f(framelab::Alphabet({"a"}), n);
  f.relation_mut(0) = framelab::Relation::full(n);
  return f;
}

}  // namespace testutil
