#include "sylvan/structure.hpp"

#include <algorithm>
#include <set>

#include "sylvan/errors.hpp"

namespace sylvan {
namespace {

// Iterative low-link DFS keyed on edge ids, so that the second copy of a
// parallel edge counts as a back edge.
struct LowLink {
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<char> is_cut;
  std::vector<std::vector<EdgeId>> components;  // edge sets of blocks (loops excluded)
};

LowLink run_lowlink(const PseudoGraph& g) {
  const int n = g.vertex_count();
  LowLink out;
  out.disc.assign(n, -1);
  out.low.assign(n, 0);
  out.is_cut.assign(n, 0);

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  std::vector<EdgeId> edge_stack;
  int timer = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (out.disc[root] >= 0) continue;
    out.disc[root] = out.low[root] = timer++;
    stack.push_back({root, kNoEdge, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incidence(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++].edge;
        const EdgeRecord& rec = g.edge(e);
        if (rec.is_loop() || e == f.parent_edge) continue;
        VertexId w = rec.other(f.v);
        if (out.disc[w] < 0) {
          edge_stack.push_back(e);
          out.disc[w] = out.low[w] = timer++;
          ++f.children;
          stack.push_back({w, e, 0, 0});
        } else if (out.disc[w] < out.disc[f.v]) {
          edge_stack.push_back(e);
          out.low[f.v] = std::min(out.low[f.v], out.disc[w]);
        }
        continue;
      }
      // finished f.v
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) out.is_cut[done.v] = 1;
        continue;
      }
      Frame& parent = stack.back();
      out.low[parent.v] = std::min(out.low[parent.v], out.low[done.v]);
      if (out.low[done.v] >= out.disc[parent.v]) {
        if (stack.size() > 1) out.is_cut[parent.v] = 1;
        std::vector<EdgeId> comp;
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          comp.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
    }
  }
  return out;
}

void require_triangle(const PseudoGraph& g, const Triangle& t) {
  if (!is_triangle_of(g, t)) throw PreconditionError("not a triangle of the graph");
}

}  // namespace

std::vector<EdgeId> bridges(const PseudoGraph& g) {
  LowLink ll = run_lowlink(g);
  std::vector<EdgeId> out;
  for (const auto& comp : ll.components) {
    if (comp.size() == 1) out.push_back(comp.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlockTree block_tree(const PseudoGraph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError();
  LowLink ll = run_lowlink(g);
  BlockTree tree;

  for (auto& comp : ll.components) {
    Block b;
    b.edges = comp;
    std::set<VertexId> vs;
    for (EdgeId e : comp) {
      vs.insert(g.edge(e).u);
      vs.insert(g.edge(e).v);
    }
    b.vertices.assign(vs.begin(), vs.end());
    b.is_bridge = comp.size() == 1;
    tree.blocks.push_back(std::move(b));
  }
  for (const EdgeRecord& e : g.edges()) {
    if (e.is_loop()) tree.blocks.push_back(Block{{e.u}, {e.id}, false});
  }
  // A graph with a single vertex and no loop still has one (trivial) block.
  if (tree.blocks.empty() && g.vertex_count() == 1) tree.blocks.push_back(Block{{0}, {}, false});
  std::sort(tree.blocks.begin(), tree.blocks.end(), [](const Block& a, const Block& b) {
    return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
  });

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (ll.is_cut[v]) tree.cut_vertices.push_back(v);
  }
  for (const Block& b : tree.blocks) {
    if (b.is_bridge) tree.bridges.push_back(b.edges.front());
  }
  std::sort(tree.bridges.begin(), tree.bridges.end());

  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    const Block& b = tree.blocks[i];
    if (b.is_bridge) continue;
    int cuts = 0;
    for (VertexId v : b.vertices) cuts += ll.is_cut[v] ? 1 : 0;
    if (cuts > 1) continue;
    std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : b.vertices) inside[v] = 1;
    std::vector<EdgeId> leaving;
    for (VertexId v : b.vertices) {
      for (const Incidence& inc : g.incidence(v)) {
        const EdgeRecord& e = g.edge(inc.edge);
        if (!inside[e.other(v)]) leaving.push_back(e.id);
      }
    }
    if (leaving.size() != 1) continue;
    EdgeId br = leaving.front();
    if (!std::binary_search(tree.bridges.begin(), tree.bridges.end(), br)) continue;
    const EdgeRecord& e = g.edge(br);
    VertexId attach = inside[e.u] ? e.u : e.v;
    tree.end_blocks.push_back({static_cast<int>(i), br, attach, e.other(attach)});
  }
  return tree;
}

std::vector<Triangle> triangles(const PseudoGraph& g) {
  const int n = g.vertex_count();
  // lowest edge id per unordered non-loop pair
  auto lowest = [&](VertexId a, VertexId b) {
    EdgeId best = kNoEdge;
    for (const Incidence& inc : g.incidence(a)) {
      const EdgeRecord& e = g.edge(inc.edge);
      if (!e.is_loop() && e.other(a) == b && (best == kNoEdge || e.id < best)) best = e.id;
    }
    return best;
  };
  std::vector<std::vector<VertexId>> nbrs(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    for (const Incidence& inc : g.incidence(v)) {
      const EdgeRecord& e = g.edge(inc.edge);
      if (!e.is_loop()) nbrs[v].push_back(e.other(v));
    }
    std::sort(nbrs[v].begin(), nbrs[v].end());
    nbrs[v].erase(std::unique(nbrs[v].begin(), nbrs[v].end()), nbrs[v].end());
  }
  std::vector<Triangle> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b : nbrs[a]) {
      if (b <= a) continue;
      for (VertexId c : nbrs[b]) {
        if (c <= b) continue;
        if (!std::binary_search(nbrs[a].begin(), nbrs[a].end(), c)) continue;
        out.push_back({{a, b, c}, {lowest(a, b), lowest(b, c), lowest(a, c)}});
      }
    }
  }
  return out;
}

bool is_triangle_of(const PseudoGraph& g, const Triangle& t) {
  const auto& vs = t.vertices;
  if (vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2]) return false;
  for (int k = 0; k < 3; ++k) {
    if (!g.valid_vertex(vs[k]) || !g.valid_edge(t.edges[k])) return false;
    const EdgeRecord& e = g.edge(t.edges[k]);
    VertexId a = vs[k];
    VertexId b = vs[(k + 1) % 3];
    if (!(e.touches(a) && e.other(a) == b) || e.is_loop()) return false;
  }
  return true;
}

bool is_contractible(const PseudoGraph& g, const Triangle& t) {
  require_triangle(g, t);
  const auto& vs = t.vertices;
  for (int k = 0; k < 3; ++k) {
    if (g.multiplicity(vs[k], vs[(k + 1) % 3]) != 1) return false;
    if (g.multiplicity(vs[k], vs[k]) != 0) return false;
  }
  return true;
}

Contraction contract_triangle(const PseudoGraph& g, const Triangle& t) {
  require_triangle(g, t);
  const int n = g.vertex_count();
  Contraction out;
  out.vertex_map.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> corner(static_cast<std::size_t>(n), 0);
  for (VertexId v : t.vertices) corner[v] = 1;
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!corner[v]) out.vertex_map[v] = next++;
  }
  out.merged = next;
  for (VertexId v : t.vertices) out.vertex_map[v] = out.merged;
  out.graph = PseudoGraph(next + 1);
  out.edge_map.assign(static_cast<std::size_t>(g.edge_count()), kNoEdge);
  for (const EdgeRecord& e : g.edges()) {
    if (std::find(t.edges.begin(), t.edges.end(), e.id) != t.edges.end()) continue;
    out.edge_map[e.id] = out.graph.add_edge(out.vertex_map[e.u], out.vertex_map[e.v]);
  }
  return out;
}

EdgeId opposite_edge(const PseudoGraph& g, const Triangle& t, EdgeId e) {
  if (!is_contractible(g, t)) throw PreconditionError("opposite edge needs a contractible triangle");
  auto side = std::find(t.edges.begin(), t.edges.end(), e);
  if (side == t.edges.end()) throw PreconditionError("edge is not a side of the triangle");
  int k = static_cast<int>(side - t.edges.begin());
  VertexId apex = t.vertices[(k + 2) % 3];
  EdgeId found = kNoEdge;
  for (const Incidence& inc : g.incidence(apex)) {
    if (std::find(t.edges.begin(), t.edges.end(), inc.edge) != t.edges.end()) continue;
    if (found != kNoEdge) throw PreconditionError("triangle corner has more than one outer edge");
    found = inc.edge;
  }
  if (found == kNoEdge) throw PreconditionError("triangle corner has no outer edge");
  return found;
}

}  // namespace sylvan
