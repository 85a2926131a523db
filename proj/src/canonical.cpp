#include "sylvan/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "sylvan/errors.hpp"

namespace sylvan {
namespace {

constexpr int kMaxCodeVertices = 255;

// Neighbour lists with multiplicities; loops kept separately.
struct Adjacency {
  int n = 0;
  std::vector<std::vector<std::pair<VertexId, int>>> nbrs;
  std::vector<int> loops;
  std::vector<int> matrix;  // n*n multiplicities

  explicit Adjacency(const PseudoGraph& g) : n(g.vertex_count()) {
    nbrs.resize(n);
    loops.assign(n, 0);
    matrix.assign(static_cast<std::size_t>(n) * n, 0);
    for (const EdgeRecord& e : g.edges()) {
      if (e.is_loop()) {
        ++loops[e.u];
        ++matrix[e.u * n + e.u];
      } else {
        ++matrix[e.u * n + e.v];
        ++matrix[e.v * n + e.u];
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w = 0; w < n; ++w) {
        if (w != v && matrix[v * n + w] > 0) nbrs[v].emplace_back(w, matrix[v * n + w]);
      }
    }
  }
  int at(VertexId a, VertexId b) const { return matrix[a * n + b]; }
};

// Refine `colour` (values in [0, k)) to the coarsest equitable partition.
// New colours are ranks of (old colour, sorted neighbour signature), so the
// result depends only on the isomorphism type of (graph, colouring).
int refine(const Adjacency& adj, std::vector<int>& colour) {
  const int n = adj.n;
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  int classes = 0;
  {
    std::vector<int> tmp = colour;
    std::sort(tmp.begin(), tmp.end());
    classes = static_cast<int>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
  }
  while (true) {
    for (VertexId v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colour[v]);
      s.push_back(adj.loops[v]);
      std::size_t start = s.size();
      for (auto [w, m] : adj.nbrs[v]) s.push_back(colour[w] * 64 + m);
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    int new_classes = n == 0 ? 0 : rank + 1;
    colour = std::move(next);
    if (new_classes == classes) return classes;
    classes = new_classes;
  }
}

int target_cell(const std::vector<int>& colour, int classes) {
  std::vector<int> size(classes, 0);
  for (int c : colour) ++size[c];
  for (int c = 0; c < classes; ++c) {
    if (size[c] > 1) return c;
  }
  return -1;
}

std::vector<int> individualise(const std::vector<int>& colour, int cell, VertexId v) {
  std::vector<int> out(colour.size());
  for (std::size_t x = 0; x < colour.size(); ++x) {
    out[x] = 2 * colour[x] + ((colour[x] == cell && static_cast<VertexId>(x) != v) ? 1 : 0);
  }
  return out;
}

class Canoniser {
 public:
  explicit Canoniser(const PseudoGraph& g) : adj_(g) {}

  CanonicalForm run() {
    std::vector<int> colour(adj_.n, 0);
    for (VertexId v = 0; v < adj_.n; ++v) colour[v] = adj_.loops[v];
    int k = refine(adj_, colour);
    std::vector<VertexId> prefix;
    search(colour, k, prefix);
    return {best_code_, best_perm_};
  }

 private:
  CanonicalCode code_for(const std::vector<int>& perm) const {
    const int n = adj_.n;
    std::vector<VertexId> inv(n);
    for (VertexId v = 0; v < n; ++v) inv[perm[v]] = v;
    CanonicalCode code;
    code.reserve(1 + static_cast<std::size_t>(n) * (n + 1) / 2);
    code.push_back(static_cast<std::uint8_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) code.push_back(static_cast<std::uint8_t>(adj_.at(inv[i], inv[j])));
    }
    return code;
  }

  void search(const std::vector<int>& colour, int classes, std::vector<VertexId>& prefix) {
    int cell = target_cell(colour, classes);
    if (cell < 0) {
      CanonicalCode code = code_for(colour);
      if (!have_best_ || code < best_code_) {
        best_code_ = std::move(code);
        best_perm_ = colour;
        have_best_ = true;
      } else if (code == best_code_) {
        // colour and best_perm_ give the same matrix: record the automorphism
        const int n = adj_.n;
        std::vector<VertexId> inv_best(n);
        for (VertexId v = 0; v < n; ++v) inv_best[best_perm_[v]] = v;
        std::vector<VertexId> gamma(n);
        for (VertexId v = 0; v < n; ++v) gamma[v] = inv_best[colour[v]];
        autos_.push_back(std::move(gamma));
      }
      return;
    }
    std::vector<VertexId> members;
    for (VertexId v = 0; v < adj_.n; ++v) {
      if (colour[v] == cell) members.push_back(v);
    }
    std::vector<VertexId> done;
    for (VertexId v : members) {
      if (equivalent_to_done(v, done, prefix)) continue;
      done.push_back(v);
      std::vector<int> next = individualise(colour, cell, v);
      int k = refine(adj_, next);
      prefix.push_back(v);
      search(next, k, prefix);
      prefix.pop_back();
    }
  }

  // True if some recorded automorphism fixing `prefix` pointwise maps a
  // vertex in the orbit of v onto an already explored vertex.
  bool equivalent_to_done(VertexId v, const std::vector<VertexId>& done,
                          const std::vector<VertexId>& prefix) const {
    if (done.empty() || autos_.empty()) return false;
    std::vector<const std::vector<VertexId>*> usable;
    for (const auto& a : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](VertexId p) { return a[p] == p; });
      if (fixes) usable.push_back(&a);
    }
    if (usable.empty()) return false;
    std::vector<char> seen(adj_.n, 0);
    std::vector<VertexId> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (std::find(done.begin(), done.end(), x) != done.end()) return true;
      for (const auto* a : usable) {
        VertexId y = (*a)[x];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  Adjacency adj_;
  bool have_best_ = false;
  CanonicalCode best_code_;
  std::vector<VertexId> best_perm_;
  std::vector<std::vector<VertexId>> autos_;
};

}  // namespace

CanonicalForm canonical_form(const PseudoGraph& g) {
  if (g.vertex_count() > kMaxCodeVertices) throw PreconditionError("graph too large for canonical code");
  return Canoniser(g).run();
}

CanonicalCode canonical_code(const PseudoGraph& g) { return canonical_form(g).code; }

PseudoGraph canonical_graph(const PseudoGraph& g) {
  CanonicalForm f = canonical_form(g);
  return relabeled(g, f.perm);
}

bool is_isomorphic(const PseudoGraph& a, const PseudoGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::vector<std::vector<VertexId>> automorphisms(const PseudoGraph& g) {
  const Adjacency adj(g);
  const int n = adj.n;
  std::vector<int> colour(n, 0);
  for (VertexId v = 0; v < n; ++v) colour[v] = adj.loops[v];
  refine(adj, colour);

  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> image(n, -1);
  std::vector<char> used(n, 0);
  // Assign images in vertex order; check multiplicities against every
  // already-mapped vertex.
  auto rec = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || colour[w] != colour[v]) continue;
      bool ok = adj.at(v, v) == adj.at(w, w);
      for (VertexId u = 0; ok && u < v; ++u) ok = adj.at(u, v) == adj.at(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      self(self, v + 1);
      used[w] = 0;
    }
    image[v] = -1;
  };
  rec(rec, 0);
  return out;
}

std::vector<int> edge_orbits(const PseudoGraph& g) {
  const int m = g.edge_count();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  // parallel classes
  for (const EdgeRecord& e : g.edges()) {
    for (const EdgeRecord& f : g.edges()) {
      if (f.id > e.id && f.u == e.u && f.v == e.v) unite(e.id, f.id);
    }
  }
  for (const auto& a : automorphisms(g)) {
    for (const EdgeRecord& e : g.edges()) {
      VertexId x = std::min(a[e.u], a[e.v]);
      VertexId y = std::max(a[e.u], a[e.v]);
      for (const EdgeRecord& f : g.edges()) {
        if (f.u == x && f.v == y) {
          unite(e.id, f.id);
          break;
        }
      }
    }
  }
  std::vector<int> orbit(m);
  std::vector<int> index(m, -1);
  int next = 0;
  for (int e = 0; e < m; ++e) {
    int r = find(e);
    if (index[r] < 0) index[r] = next++;
    orbit[e] = index[r];
  }
  return orbit;
}

}  // namespace sylvan
