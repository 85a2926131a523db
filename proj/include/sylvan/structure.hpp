#pragma once

#include <array>
#include <vector>

#include "sylvan/graph.hpp"

namespace sylvan {

struct Block {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted
  bool is_bridge = false;          // single non-loop edge whose removal disconnects
};

/// An end-block together with the unique bridge leaving it. `attachment` is
/// the block vertex incident to the bridge, `root` the vertex outside.
struct EndBlock {
  int block = -1;
  EdgeId bridge = kNoEdge;
  VertexId attachment = -1;
  VertexId root = -1;
};

struct BlockTree {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;  // sorted
  std::vector<EdgeId> bridges;         // sorted
  std::vector<EndBlock> end_blocks;    // ordered by block index
};

/// Bridges of any pseudograph (connected or not). Parallel edges and loops are
/// never bridges.
std::vector<EdgeId> bridges(const PseudoGraph& g);

/// Block decomposition of a connected graph. Loops form single-vertex blocks;
/// bridges form two-vertex blocks. Only non-bridge blocks with exactly one
/// leaving edge, which must be a bridge, are reported as end-blocks.
/// Throws DisconnectedGraphError on disconnected input.
BlockTree block_tree(const PseudoGraph& g);

/// A vertex triple spanning a 3-cycle. `edges[k]` joins `vertices[k]` and
/// `vertices[(k + 1) % 3]`; among parallel choices the lowest id is used.
struct Triangle {
  std::array<VertexId, 3> vertices{};
  std::array<EdgeId, 3> edges{};

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// All triangles, ordered lexicographically by sorted vertex triple.
std::vector<Triangle> triangles(const PseudoGraph& g);

bool is_triangle_of(const PseudoGraph& g, const Triangle& t);

/// True iff contracting `t` yields no loop (no doubled side, no loop on a
/// corner). Throws PreconditionError if `t` is not a triangle of `g`.
bool is_contractible(const PseudoGraph& g, const Triangle& t);

struct Contraction {
  PseudoGraph graph;
  VertexId merged = -1;
  /// Per vertex of the input: its id in `graph` (corners map to `merged`).
  std::vector<VertexId> vertex_map;
  /// Per edge of the input: its id in `graph`, or kNoEdge for the three
  /// triangle sides.
  std::vector<EdgeId> edge_map;
};

/// G/K. Surviving vertices keep their relative order and the merged vertex is
/// appended last; surviving edges keep their relative order. Extra edges
/// between corners (beyond the three sides) become loops at the merged vertex.
Contraction contract_triangle(const PseudoGraph& g, const Triangle& t);

/// The edge leaving the corner not on side `e` of a contractible triangle.
EdgeId opposite_edge(const PseudoGraph& g, const Triangle& t, EdgeId e);

}  // namespace sylvan
