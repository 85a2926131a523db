#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sylvan {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr EdgeId kNoEdge = -1;

struct EdgeRecord {
  EdgeId id = kNoEdge;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  bool touches(VertexId x) const { return u == x || v == x; }
  /// The endpoint opposite to `x`; for a loop this is `x` itself.
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// One entry of a vertex's incidence list. Loops appear once with
/// multiplicity 2.
struct Incidence {
  EdgeId edge = kNoEdge;
  int multiplicity = 1;
};

enum class GraphClass { kSimple, kMultigraph, kPseudograph };

const char* to_string(GraphClass c);

/// Undirected graph allowing loops and parallel edges. Vertices are the dense
/// range [0, n); edge ids are the dense range [0, |E|) in insertion order, so
/// parallel edges stay distinguishable.
class PseudoGraph {
 public:
  PseudoGraph() = default;
  explicit PseudoGraph(int vertex_count);
  PseudoGraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(incidence_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const EdgeRecord& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const EdgeRecord> edges() const { return edges_; }
  std::span<const Incidence> incidence(VertexId v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }

  /// Edge ids at `v`, one entry per half-edge (a loop is listed twice).
  std::vector<EdgeId> half_edges(VertexId v) const;
  /// Number of edges joining u and v (loops at u when u == v).
  int multiplicity(VertexId u, VertexId v) const;

  int loop_count() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return loop_count() == 0 && !has_parallel_edges(); }
  GraphClass graph_class() const;

  bool valid_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  bool valid_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  friend bool operator==(const PseudoGraph& a, const PseudoGraph& b);

 private:
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

int degree(const PseudoGraph& g, VertexId v);
bool is_cubic(const PseudoGraph& g);
bool is_connected(const PseudoGraph& g);
/// Component index per vertex, numbered in order of lowest vertex.
std::vector<int> connected_components(const PseudoGraph& g, int* count = nullptr);

/// Sum over vertex pairs of (multiplicity - 1) plus the number of loops.
int defect_count(const PseudoGraph& g);

/// Copy of `g` with edge `skip` removed; later ids shift down by one.
PseudoGraph without_edge(const PseudoGraph& g, EdgeId skip);

/// Induced subgraph on `keep` (vertices renumbered in the given order).
/// `edge_map`, when non-null, receives for each new edge its id in `g`.
PseudoGraph induced_subgraph(const PseudoGraph& g, std::span<const VertexId> keep,
                             std::vector<EdgeId>* edge_map = nullptr);

/// Relabel vertices: vertex v of `g` becomes `perm[v]`. Edges are re-emitted
/// sorted by (min endpoint, max endpoint).
PseudoGraph relabeled(const PseudoGraph& g, std::span<const VertexId> perm);

std::string describe(const PseudoGraph& g);

}  // namespace sylvan
