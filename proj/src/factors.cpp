#include "sylvan/factors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sylvan/errors.hpp"
#include "sylvan/structure.hpp"

namespace sylvan {

bool is_matching(const PseudoGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<char> hit(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId id : edges) {
    const EdgeRecord& e = g.edge(id);
    if (e.is_loop() || hit[e.u] || hit[e.v]) return false;
    hit[e.u] = hit[e.v] = 1;
  }
  return true;
}

bool is_perfect_matching(const PseudoGraph& g, const std::vector<EdgeId>& edges) {
  return is_matching(g, edges) && static_cast<int>(edges.size()) * 2 == g.vertex_count();
}

bool is_two_factor(const PseudoGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId id : edges) {
    if (seen[id]) return false;
    seen[id] = 1;
    const EdgeRecord& e = g.edge(id);
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

Matching maximum_matching(const PseudoGraph& g) {
  const int n = g.vertex_count();
  // collapsed simple adjacency, remembering the lowest edge id per pair
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<std::vector<EdgeId>> via(n);
  for (const EdgeRecord& e : g.edges()) {
    if (e.is_loop()) continue;
    auto it = std::find(adj[e.u].begin(), adj[e.u].end(), e.v);
    if (it != adj[e.u].end()) continue;  // ids ascend, first copy is lowest
    adj[e.u].push_back(e.v);
    via[e.u].push_back(e.id);
    adj[e.v].push_back(e.u);
    via[e.v].push_back(e.id);
  }

  std::vector<VertexId> match(n, -1), parent(n, -1), base(n);
  std::vector<char> used(n), blossom(n);
  std::deque<VertexId> queue;

  auto lca = [&](VertexId a, VertexId b) {
    std::vector<char> mark(n, 0);
    while (true) {
      a = base[a];
      mark[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](VertexId v, VertexId b, VertexId child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](VertexId root) -> VertexId {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    queue.assign(1, root);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          VertexId cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  // greedy start
  for (VertexId v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    for (VertexId w : adj[v]) {
      if (match[w] < 0) {
        match[v] = w;
        match[w] = v;
        break;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    VertexId end = find_path(v);
    while (end >= 0) {
      VertexId pv = parent[end];
      VertexId ppv = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = ppv;
    }
  }

  Matching out;
  for (VertexId v = 0; v < n; ++v) {
    VertexId w = match[v];
    if (w > v) {
      auto it = std::find(adj[v].begin(), adj[v].end(), w);
      out.edges.push_back(via[v][static_cast<std::size_t>(it - adj[v].begin())]);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::optional<Matching> find_1_factor(const PseudoGraph& g) {
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  Matching m = maximum_matching(g);
  if (static_cast<int>(m.edges.size()) * 2 != g.vertex_count()) return std::nullopt;
  return m;
}

TwoFactor complementary_2_factor(const PseudoGraph& g, const Matching& f) {
  if (!is_cubic(g)) throw PreconditionError("complementary 2-factor needs a cubic graph");
  if (!is_perfect_matching(g, f.edges)) throw PreconditionError("matching is not perfect");
  std::vector<char> in(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : f.edges) in[e] = 1;
  TwoFactor out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in[e]) out.edges.push_back(e);
  }
  if (!is_two_factor(g, out.edges)) throw std::logic_error("complement of a perfect matching is not 2-regular");
  return out;
}

TwoFactor end_block_2_factor(const PseudoGraph& block) {
  const int n = block.vertex_count();
  VertexId low = -1;
  for (VertexId v = 0; v < n; ++v) {
    int d = degree(block, v);
    if (d == 3) continue;
    if (d != 2 || low >= 0) {
      throw PreconditionError("end-block 2-factor needs all degrees 3 except one vertex of degree 2");
    }
    low = v;
  }
  if (low < 0) throw PreconditionError("end-block 2-factor needs one vertex of degree 2");
  if (!bridges(block).empty()) throw PreconditionError("end-block must be bridgeless");

  PseudoGraph doubled(2 * n);
  for (const EdgeRecord& e : block.edges()) doubled.add_edge(e.u, e.v);
  for (const EdgeRecord& e : block.edges()) doubled.add_edge(e.u + n, e.v + n);
  EdgeId link = doubled.add_edge(low, low + n);

  std::optional<Matching> pm = find_1_factor(doubled);
  if (!pm) throw std::logic_error("doubled end-block has no perfect matching");
  if (!std::binary_search(pm->edges.begin(), pm->edges.end(), link)) {
    throw std::logic_error("perfect matching of the doubled end-block misses its bridge");
  }
  std::vector<char> in(static_cast<std::size_t>(doubled.edge_count()), 0);
  for (EdgeId e : pm->edges) in[e] = 1;
  TwoFactor out;
  for (EdgeId e = 0; e < block.edge_count(); ++e) {
    if (!in[e]) out.edges.push_back(e);
  }
  if (!is_two_factor(block, out.edges)) throw std::logic_error("end-block 2-factor is not 2-regular");
  return out;
}

ChromaticIndex chromatic_index_cubic(const PseudoGraph& g) {
  if (!is_cubic(g)) throw PreconditionError("chromatic index routine needs a cubic graph");
  if (g.loop_count() > 0) throw PreconditionError("graphs with loops have no proper edge colouring");
  const int m = g.edge_count();
  // BFS edge order keeps the frontier small
  std::vector<EdgeId> order;
  std::vector<char> placed(m, 0), seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::deque<VertexId> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      for (const Incidence& inc : g.incidence(v)) {
        if (!placed[inc.edge]) {
          placed[inc.edge] = 1;
          order.push_back(inc.edge);
        }
        VertexId w = g.edge(inc.edge).other(v);
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      }
    }
  }
  std::vector<int> colour(m, -1);
  std::vector<int> used(static_cast<std::size_t>(g.vertex_count()), 0);  // bitmask per vertex
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const EdgeRecord& e = g.edge(order[i]);
    int blocked = used[e.u] | used[e.v];
    // the first edge's colour is fixed by symmetry
    int limit = i == 0 ? 1 : 3;
    for (int c = 0; c < limit; ++c) {
      if (blocked & (1 << c)) continue;
      colour[e.id] = c;
      used[e.u] |= 1 << c;
      used[e.v] |= 1 << c;
      if (self(self, i + 1)) return true;
      used[e.u] &= ~(1 << c);
      used[e.v] &= ~(1 << c);
    }
    colour[e.id] = -1;
    return false;
  };
  if (rec(rec, 0)) return {3, ProperEdgeColoring{colour}};
  return {4, std::nullopt};
}

void for_each_perfect_matching(const PseudoGraph& g,
                               const std::function<void(const std::vector<EdgeId>&)>& visit) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return;
  std::vector<char> covered(n, 0);
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self) -> void {
    VertexId v = 0;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      std::vector<EdgeId> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    covered[v] = 1;
    for (const Incidence& inc : g.incidence(v)) {
      const EdgeRecord& e = g.edge(inc.edge);
      if (e.is_loop()) continue;
      VertexId w = e.other(v);
      if (covered[w]) continue;
      covered[w] = 1;
      chosen.push_back(e.id);
      self(self);
      chosen.pop_back();
      covered[w] = 0;
    }
    covered[v] = 0;
  };
  rec(rec);
}

}  // namespace sylvan
