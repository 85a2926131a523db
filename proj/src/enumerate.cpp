#include "sylvan/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "sylvan/canonical.hpp"
#include "sylvan/errors.hpp"

namespace sylvan {
namespace {

int max_order(GraphClass cls) {
  switch (cls) {
    case GraphClass::kSimple:
      return kMaxSimpleOrder;
    case GraphClass::kMultigraph:
      return kMaxMultigraphOrder;
    case GraphClass::kPseudograph:
      return kMaxPseudographOrder;
  }
  return 0;
}

// How far `g` may be from the target class when `steps` insertions remain.
bool within_budget(const PseudoGraph& g, GraphClass cls, int steps) {
  switch (cls) {
    case GraphClass::kPseudograph:
      return true;
    case GraphClass::kMultigraph:
      return g.loop_count() <= 2 * steps;
    case GraphClass::kSimple:
      return defect_count(g) <= 2 * steps;
  }
  return false;
}

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

PseudoGraph insert_edge(const PseudoGraph& g, EdgeId e1, EdgeId e2) {
  const int n = g.vertex_count();
  const VertexId a = n;
  const VertexId b = n + 1;
  EdgeList es;
  es.reserve(static_cast<std::size_t>(g.edge_count()) + 3);
  for (const EdgeRecord& e : g.edges()) {
    if (e.id == e1 || e.id == e2) continue;
    es.emplace_back(e.u, e.v);
  }
  const EdgeRecord& x = g.edge(e1);
  if (e1 == e2) {
    es.emplace_back(x.u, a);
    es.emplace_back(a, b);
    es.emplace_back(b, x.v);
  } else {
    const EdgeRecord& y = g.edge(e2);
    es.emplace_back(x.u, a);
    es.emplace_back(a, x.v);
    es.emplace_back(y.u, b);
    es.emplace_back(b, y.v);
  }
  es.emplace_back(a, b);
  return PseudoGraph(n + 2, es);
}

PseudoGraph insert_pendant_loop(const PseudoGraph& g, EdgeId e) {
  const int n = g.vertex_count();
  const VertexId mid = n;
  const VertexId leaf = n + 1;
  EdgeList es;
  es.reserve(static_cast<std::size_t>(g.edge_count()) + 3);
  for (const EdgeRecord& f : g.edges()) {
    if (f.id != e) es.emplace_back(f.u, f.v);
  }
  const EdgeRecord& x = g.edge(e);
  es.emplace_back(x.u, mid);
  es.emplace_back(mid, x.v);
  es.emplace_back(mid, leaf);
  es.emplace_back(leaf, leaf);
  return PseudoGraph(n + 2, es);
}

std::vector<PseudoGraph> seeds() {
  PseudoGraph theta(2);
  for (int i = 0; i < 3; ++i) theta.add_edge(0, 1);
  PseudoGraph dumbbell(2);
  dumbbell.add_edge(0, 0);
  dumbbell.add_edge(0, 1);
  dumbbell.add_edge(1, 1);
  return {canonical_graph(theta), canonical_graph(dumbbell)};
}

std::vector<PseudoGraph> sorted_values(std::map<CanonicalCode, PseudoGraph>& found) {
  std::vector<PseudoGraph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace

bool in_class(const PseudoGraph& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::kPseudograph:
      return true;
    case GraphClass::kMultigraph:
      return g.loop_count() == 0;
    case GraphClass::kSimple:
      return g.is_simple();
  }
  return false;
}

std::vector<PseudoGraph> enumerate_cubic(int n, GraphClass cls, const EnumerateOptions& options) {
  if (n % 2 != 0 || n < 2) throw PreconditionError("cubic graphs need an even positive order");
  if (n > max_order(cls)) {
    throw PreconditionError(std::string("enumeration of ") + to_string(cls) + " cubic graphs supports n <= " +
                            std::to_string(max_order(cls)));
  }
  std::mt19937_64 rng(options.shuffle_seed);
  auto maybe_shuffle = [&](auto& v) {
    if (options.shuffle_seed != 0) std::shuffle(v.begin(), v.end(), rng);
  };

  std::vector<PseudoGraph> level;
  for (PseudoGraph& g : seeds()) {
    if (within_budget(g, cls, (n - 2) / 2)) level.push_back(std::move(g));
  }
  for (int order = 2; order < n; order += 2) {
    const int steps_after = (n - order - 2) / 2;
    std::map<CanonicalCode, PseudoGraph> found;
    auto offer = [&](PseudoGraph cand) {
      if (!within_budget(cand, cls, steps_after)) return;
      CanonicalForm form = canonical_form(cand);
      if (found.count(form.code) != 0) return;
      found.emplace(std::move(form.code), relabeled(cand, form.perm));
    };
    maybe_shuffle(level);
    for (const PseudoGraph& g : level) {
      const int m = g.edge_count();
      std::vector<std::pair<EdgeId, EdgeId>> sites;
      for (EdgeId i = 0; i < m; ++i) {
        for (EdgeId j = i; j < m; ++j) sites.emplace_back(i, j);
      }
      maybe_shuffle(sites);
      for (auto [i, j] : sites) offer(insert_edge(g, i, j));
      for (EdgeId i = 0; i < m; ++i) offer(insert_pendant_loop(g, i));
    }
    level = sorted_values(found);
  }
  std::vector<PseudoGraph> out;
  for (PseudoGraph& g : level) {
    if (in_class(g, cls)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<PseudoGraph> enumerate_cubic_up_to(int max_n, GraphClass cls, const EnumerateOptions& options) {
  std::vector<PseudoGraph> out;
  for (int n = 2; n <= max_n; n += 2) {
    for (PseudoGraph& g : enumerate_cubic(n, cls, options)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace sylvan
