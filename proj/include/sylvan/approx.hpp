#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sylvan/graph.hpp"
#include "sylvan/hcoloring.hpp"

namespace sylvan {

inline constexpr int kUncolored = -1;

/// A proper partial edge colouring with colours {0, 1, 2}.
struct PartialThreeColoring {
  struct Gap {
    EdgeId edge = kNoEdge;
    int alpha = kUncolored;  // missing at v
    int beta = kUncolored;   // missing at u
    /// The alpha/beta chain from u to v followed by the edge itself.
    std::vector<EdgeId> cycle;
  };

  std::vector<int> colour;  // kUncolored or 0..2
  std::vector<Gap> gaps;    // one per uncoloured edge, by edge id
  bool used_exact_fallback = false;

  std::vector<EdgeId> uncolored() const;
};

/// Greedy colouring followed by Kempe-chain repair until no uncoloured edge
/// can be coloured directly or after flipping one chain. If the fixpoint
/// violates the structural invariants (uncoloured edges a matching, each
/// closing an odd alternating cycle, cycles vertex-disjoint) the colouring is
/// replaced by an exact minimum one found by backtracking.
/// Throws PreconditionError for loops, degree above 3 or triangles.
PartialThreeColoring near_3_edge_coloring(const PseudoGraph& g);

/// Empty when all invariants hold; otherwise one message per violation.
std::vector<std::string> check_partial_coloring(const PseudoGraph& g, const PartialThreeColoring& c);

struct FailureWitness {
  VertexId vertex = -1;
  std::array<EdgeId, 2> edges{};
};

struct ApproxStats {
  int contractions = 0;      // Case 1 steps
  int satisfied_merges = 0;  // the merged vertex was satisfied
  int failed_merges = 0;     // the merged vertex failed
  int uncolored = 0;         // uncoloured edges of the final remainder
  int triangle_blocks = 0;
  bool dumbbell = false;
  bool exact_fallback = false;
};

struct ApproxResult {
  EdgeMapping mapping;  // onto atlas(Sylvester10)
  SatisfactionReport report;
  ApproxStats stats;

  int satisfied() const { return static_cast<int>(report.satisfied.size()); }
  /// ceil(4n/5).
  int bound() const;
};

/// S-colouring of a connected loop-free cubic graph satisfying at least
/// four fifths of the vertices: contract contractible triangles one at a
/// time, then colour the remainder without its triangle blocks by a near
/// 3-edge-colouring and glue the blocks onto the end-blocks of S.
/// Throws PreconditionError for loops, non-cubic or disconnected input.
ApproxResult approx_s_coloring(const PseudoGraph& g);

/// A pair of equally coloured edges at every failed vertex. Throws
/// std::logic_error if some failed vertex has none.
std::vector<FailureWitness> failure_witnesses(const ApproxResult& r);

/// {"n", "satisfied", "bound", "uncolored", "witnesses", "assignment"}
std::string approx_to_json(const ApproxResult& r);

}  // namespace sylvan
