#pragma once

#include <random>
#include <vector>

#include "sylvan/atlas.hpp"
#include "sylvan/enumerate.hpp"
#include "sylvan/graph.hpp"

namespace fixtures {

inline sylvan::PseudoGraph named(sylvan::AtlasName n) { return sylvan::atlas(n).graph; }

inline sylvan::PseudoGraph make(int n, std::vector<std::pair<int, int>> edges) {
  sylvan::PseudoGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline sylvan::PseudoGraph theta() { return make(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline sylvan::PseudoGraph cube() {
  return make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline std::vector<sylvan::VertexId> random_perm(int n, std::mt19937_64& rng) {
  std::vector<sylvan::VertexId> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Enumerations shared across test cases.
inline const std::vector<sylvan::PseudoGraph>& simple_up_to_10() {
  static const auto v = sylvan::enumerate_cubic_up_to(10, sylvan::GraphClass::kSimple);
  return v;
}
inline const std::vector<sylvan::PseudoGraph>& multi_up_to_8() {
  static const auto v = sylvan::enumerate_cubic_up_to(8, sylvan::GraphClass::kMultigraph);
  return v;
}
inline const std::vector<sylvan::PseudoGraph>& pseudo_up_to_8() {
  static const auto v = sylvan::enumerate_cubic_up_to(8, sylvan::GraphClass::kPseudograph);
  return v;
}

}  // namespace fixtures
