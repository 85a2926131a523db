#include "sylvan/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sylvan/errors.hpp"

namespace sylvan {

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kSimple:
      return "simple";
    case GraphClass::kMultigraph:
      return "multigraph";
    case GraphClass::kPseudograph:
      return "pseudograph";
  }
  return "?";
}

PseudoGraph::PseudoGraph(int vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
}

PseudoGraph::PseudoGraph(int vertex_count,
                         std::span<const std::pair<VertexId, VertexId>> edges)
    : PseudoGraph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

EdgeId PseudoGraph::add_edge(VertexId u, VertexId v) {
  if (!valid_vertex(u) || !valid_vertex(v)) {
    throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
  }
  if (u > v) std::swap(u, v);
  EdgeId id = edge_count();
  edges_.push_back({id, u, v});
  if (u == v) {
    incidence_[u].push_back({id, 2});
  } else {
    incidence_[u].push_back({id, 1});
    incidence_[v].push_back({id, 1});
  }
  return id;
}

std::vector<EdgeId> PseudoGraph::half_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const Incidence& inc : incidence(v)) {
    for (int k = 0; k < inc.multiplicity; ++k) out.push_back(inc.edge);
  }
  return out;
}

int PseudoGraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (const Incidence& inc : incidence(u)) {
    const EdgeRecord& e = edges_[inc.edge];
    if (u == v ? e.is_loop() : (!e.is_loop() && e.other(u) == v)) ++count;
  }
  return count;
}

int PseudoGraph::loop_count() const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const EdgeRecord& e) { return e.is_loop(); }));
}

bool PseudoGraph::has_parallel_edges() const {
  std::vector<std::pair<VertexId, VertexId>> ends;
  for (const EdgeRecord& e : edges_) {
    if (!e.is_loop()) ends.emplace_back(e.u, e.v);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) != ends.end();
}

GraphClass PseudoGraph::graph_class() const {
  if (loop_count() > 0) return GraphClass::kPseudograph;
  return has_parallel_edges() ? GraphClass::kMultigraph : GraphClass::kSimple;
}

bool operator==(const PseudoGraph& a, const PseudoGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    if (a.edges_[e].u != b.edges_[e].u || a.edges_[e].v != b.edges_[e].v) return false;
  }
  return true;
}

int degree(const PseudoGraph& g, VertexId v) {
  int d = 0;
  for (const Incidence& inc : g.incidence(v)) d += inc.multiplicity;
  return d;
}

bool is_cubic(const PseudoGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (degree(g, v) != 3) return false;
  }
  return true;
}

std::vector<int> connected_components(const PseudoGraph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incidence(x)) {
        VertexId y = g.edge(inc.edge).other(x);
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const PseudoGraph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

int defect_count(const PseudoGraph& g) {
  std::map<std::pair<VertexId, VertexId>, int> mult;
  int loops = 0;
  for (const EdgeRecord& e : g.edges()) {
    if (e.is_loop()) {
      ++loops;
    } else {
      ++mult[{e.u, e.v}];
    }
  }
  int defects = loops;
  for (const auto& [pair, m] : mult) defects += m - 1;
  return defects;
}

PseudoGraph without_edge(const PseudoGraph& g, EdgeId skip) {
  PseudoGraph out(g.vertex_count());
  for (const EdgeRecord& e : g.edges()) {
    if (e.id != skip) out.add_edge(e.u, e.v);
  }
  return out;
}

PseudoGraph induced_subgraph(const PseudoGraph& g, std::span<const VertexId> keep,
                             std::vector<EdgeId>* edge_map) {
  std::vector<VertexId> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<VertexId>(i);
  PseudoGraph out(static_cast<int>(keep.size()));
  if (edge_map != nullptr) edge_map->clear();
  for (const EdgeRecord& e : g.edges()) {
    if (index[e.u] < 0 || index[e.v] < 0) continue;
    out.add_edge(index[e.u], index[e.v]);
    if (edge_map != nullptr) edge_map->push_back(e.id);
  }
  return out;
}

PseudoGraph relabeled(const PseudoGraph& g, std::span<const VertexId> perm) {
  std::vector<std::pair<VertexId, VertexId>> ends;
  ends.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const EdgeRecord& e : g.edges()) {
    VertexId a = perm[e.u];
    VertexId b = perm[e.v];
    ends.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(ends.begin(), ends.end());
  return PseudoGraph(g.vertex_count(), ends);
}

std::string describe(const PseudoGraph& g) {
  std::ostringstream os;
  os << "PseudoGraph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ", "
     << to_string(g.graph_class()) << ")";
  return os.str();
}

}  // namespace sylvan
