#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sylvan/graph.hpp"

namespace sylvan {

/// Sorted edge ids, pairwise vertex-disjoint, no loops.
struct Matching {
  std::vector<EdgeId> edges;
};

/// Sorted edge ids; every vertex meets exactly two of them (a loop counts 2).
struct TwoFactor {
  std::vector<EdgeId> edges;
};

/// colour[e] in {0, 1, 2}, adjacent edges distinct.
struct ProperEdgeColoring {
  std::vector<int> colour;
};

bool is_matching(const PseudoGraph& g, const std::vector<EdgeId>& edges);
bool is_perfect_matching(const PseudoGraph& g, const std::vector<EdgeId>& edges);
bool is_two_factor(const PseudoGraph& g, const std::vector<EdgeId>& edges);

/// Maximum-cardinality matching by Edmonds' blossom shrinking (BFS with an
/// explicit queue). Loops are ignored and parallel edges collapse to their
/// lowest id.
Matching maximum_matching(const PseudoGraph& g);

/// A perfect matching, or nullopt when none exists.
std::optional<Matching> find_1_factor(const PseudoGraph& g);

/// E(g) \ f. Throws PreconditionError unless g is cubic and f perfect.
TwoFactor complementary_2_factor(const PseudoGraph& g, const Matching& f);

/// 2-factor of a bridgeless graph whose vertices all have degree 3 except
/// one of degree 2. Two copies are joined at their degree-2 vertices by a
/// new bridge, a perfect matching of the doubled graph is found (it must use
/// the bridge), and the complement is restricted to the first copy.
TwoFactor end_block_2_factor(const PseudoGraph& block);

struct ChromaticIndex {
  int value = 0;  // 3 or 4
  std::optional<ProperEdgeColoring> witness;
};

/// Exact 3-edge-colourability of a loop-free cubic graph by backtracking;
/// reports 4 otherwise (Shannon's bound for cubic multigraphs).
ChromaticIndex chromatic_index_cubic(const PseudoGraph& g);

/// Calls `visit` for every perfect matching of a loop-free graph.
void for_each_perfect_matching(const PseudoGraph& g,
                               const std::function<void(const std::vector<EdgeId>&)>& visit);

}  // namespace sylvan
