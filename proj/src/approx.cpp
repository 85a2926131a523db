#include "sylvan/approx.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>

#include <json.hpp>

#include "sylvan/atlas.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/structure.hpp"

namespace sylvan {

std::vector<EdgeId> PartialThreeColoring::uncolored() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < colour.size(); ++e) {
    if (colour[e] == kUncolored) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

namespace {

using Colours = std::vector<int>;

unsigned missing(const PseudoGraph& g, const Colours& col, VertexId x) {
  unsigned used = 0;
  for (const Incidence& inc : g.incidence(x)) {
    const int c = col[static_cast<std::size_t>(inc.edge)];
    if (c != kUncolored) used |= 1u << c;
  }
  return 7u & ~used;
}

EdgeId edge_with_colour(const PseudoGraph& g, const Colours& col, VertexId x, int c, EdgeId skip) {
  for (const Incidence& inc : g.incidence(x)) {
    if (inc.edge != skip && col[static_cast<std::size_t>(inc.edge)] == c) return inc.edge;
  }
  return kNoEdge;
}

// The maximal path from `start` whose edges alternate first, second, ...
struct Chain {
  std::vector<EdgeId> edges;
  VertexId end = -1;
};

Chain kempe_chain(const PseudoGraph& g, const Colours& col, VertexId start, int first, int second) {
  Chain ch;
  VertexId at = start;
  EdgeId prev = kNoEdge;
  int want = first;
  while (true) {
    const EdgeId e = edge_with_colour(g, col, at, want, prev);
    if (e == kNoEdge) break;
    ch.edges.push_back(e);
    at = g.edge(e).other(at);
    prev = e;
    want = (want == first) ? second : first;
    if (ch.edges.size() > static_cast<std::size_t>(g.edge_count())) throw std::logic_error("kempe chain does not end");
  }
  ch.end = at;
  return ch;
}

// For an uncoloured edge that cannot be coloured directly: the first
// (beta, alpha) choice whose chain from u returns to v.
std::optional<PartialThreeColoring::Gap> blocked_gap(const PseudoGraph& g, const Colours& col, EdgeId e) {
  const EdgeRecord& r = g.edge(e);
  const unsigned mu = missing(g, col, r.u);
  const unsigned mv = missing(g, col, r.v);
  if ((mu & mv) != 0) return std::nullopt;
  for (int beta = 0; beta < 3; ++beta) {
    if (!((mu >> beta) & 1)) continue;
    for (int alpha = 0; alpha < 3; ++alpha) {
      if (!((mv >> alpha) & 1)) continue;
      Chain ch = kempe_chain(g, col, r.u, alpha, beta);
      if (ch.end != r.v) continue;
      PartialThreeColoring::Gap gap;
      gap.edge = e;
      gap.alpha = alpha;
      gap.beta = beta;
      gap.cycle = std::move(ch.edges);
      gap.cycle.push_back(e);
      return gap;
    }
  }
  return std::nullopt;
}

// Colours one uncoloured edge directly or after one chain flip.
bool repair(const PseudoGraph& g, Colours& col, EdgeId e) {
  const EdgeRecord& r = g.edge(e);
  const unsigned mu = missing(g, col, r.u);
  const unsigned mv = missing(g, col, r.v);
  if ((mu & mv) != 0) {
    col[static_cast<std::size_t>(e)] = std::countr_zero(mu & mv);
    return true;
  }
  for (int beta = 0; beta < 3; ++beta) {
    if (!((mu >> beta) & 1)) continue;
    for (int alpha = 0; alpha < 3; ++alpha) {
      if (!((mv >> alpha) & 1)) continue;
      const Chain ch = kempe_chain(g, col, r.u, alpha, beta);
      if (ch.end == r.v) continue;
      for (EdgeId f : ch.edges) {
        int& c = col[static_cast<std::size_t>(f)];
        c = (c == alpha) ? beta : alpha;
      }
      col[static_cast<std::size_t>(e)] = alpha;
      return true;
    }
  }
  return false;
}

bool fill_gaps(const PseudoGraph& g, PartialThreeColoring& pc) {
  pc.gaps.clear();
  for (EdgeId e : pc.uncolored()) {
    auto gap = blocked_gap(g, pc.colour, e);
    if (!gap) return false;
    pc.gaps.push_back(std::move(*gap));
  }
  return true;
}

// Backtracking over edges in id order with at most `budget` uncoloured
// edges; `accept` sees every complete colouring and returns true to stop.
bool exact_search(const PseudoGraph& g, int budget, const std::function<bool(const Colours&)>& accept) {
  Colours col(static_cast<std::size_t>(g.edge_count()), kUncolored);
  auto rec = [&](auto&& self, EdgeId e, int left) -> bool {
    if (e == g.edge_count()) return accept(col);
    const EdgeRecord& r = g.edge(e);
    const unsigned free = missing(g, col, r.u) & missing(g, col, r.v);
    for (int c = 0; c < 3; ++c) {
      if (!((free >> c) & 1)) continue;
      col[static_cast<std::size_t>(e)] = c;
      if (self(self, e + 1, left)) return true;
    }
    col[static_cast<std::size_t>(e)] = kUncolored;
    return left > 0 && self(self, e + 1, left - 1);
  };
  return rec(rec, 0, budget);
}

const LabeledAtlasGraph& sylvester() {
  static const LabeledAtlasGraph s = atlas(AtlasName::kSylvester10);
  return s;
}

const CompatibilityTables& sylvester_tables() {
  static const CompatibilityTables t = CompatibilityTables::build(sylvester().graph);
  return t;
}

}  // namespace

std::vector<std::string> check_partial_coloring(const PseudoGraph& g, const PartialThreeColoring& pc) {
  std::vector<std::string> problems;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    unsigned seen = 0;
    for (const Incidence& inc : g.incidence(x)) {
      const int c = pc.colour[static_cast<std::size_t>(inc.edge)];
      if (c == kUncolored) continue;
      if ((seen >> c) & 1) problems.push_back("colour repeated at vertex " + std::to_string(x));
      seen |= 1u << c;
    }
  }
  const std::vector<EdgeId> un = pc.uncolored();
  std::vector<int> touched(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : un) {
    ++touched[static_cast<std::size_t>(g.edge(e).u)];
    ++touched[static_cast<std::size_t>(g.edge(e).v)];
  }
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (touched[static_cast<std::size_t>(x)] > 1) problems.push_back("uncoloured edges meet at vertex " + std::to_string(x));
  }
  if (pc.gaps.size() != un.size()) {
    problems.push_back("missing cycle data for some uncoloured edge");
    return problems;
  }
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < pc.gaps.size(); ++i) {
    const auto& gap = pc.gaps[i];
    const std::string name = "cycle of edge " + std::to_string(gap.edge);
    if (gap.cycle.empty() || gap.cycle.back() != gap.edge) {
      problems.push_back(name + " does not end with the edge");
      continue;
    }
    if (gap.cycle.size() % 2 == 0) problems.push_back(name + " has even length");
    if (gap.cycle.size() < 5) problems.push_back(name + " is shorter than 5");
    // Walk it: alternating colours from u, closing at u, no repeated vertex.
    VertexId at = g.edge(gap.edge).u;
    std::vector<VertexId> verts{at};
    for (std::size_t k = 0; k + 1 < gap.cycle.size(); ++k) {
      const EdgeRecord& r = g.edge(gap.cycle[k]);
      const int want = (k % 2 == 0) ? gap.alpha : gap.beta;
      if (!r.touches(at) || pc.colour[static_cast<std::size_t>(r.id)] != want) {
        problems.push_back(name + " is not an alternating chain");
        break;
      }
      at = r.other(at);
      verts.push_back(at);
    }
    if (at != g.edge(gap.edge).v) problems.push_back(name + " does not return to the edge");
    std::vector<VertexId> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) problems.push_back(name + " repeats a vertex");
    for (VertexId x : verts) {
      int& o = owner[static_cast<std::size_t>(x)];
      if (o != -1 && o != static_cast<int>(i)) problems.push_back(name + " meets another cycle at " + std::to_string(x));
      o = static_cast<int>(i);
    }
  }
  return problems;
}

PartialThreeColoring near_3_edge_coloring(const PseudoGraph& g) {
  if (g.loop_count() != 0) throw PreconditionError("near 3-edge-colouring needs a loop-free graph");
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (degree(g, x) > 3) throw PreconditionError("near 3-edge-colouring needs maximum degree 3");
  }
  if (!triangles(g).empty()) throw PreconditionError("near 3-edge-colouring needs a triangle-free graph");

  PartialThreeColoring pc;
  pc.colour.assign(static_cast<std::size_t>(g.edge_count()), kUncolored);
  for (const EdgeRecord& e : g.edges()) {
    const unsigned free = missing(g, pc.colour, e.u) & missing(g, pc.colour, e.v);
    if (free != 0) pc.colour[static_cast<std::size_t>(e.id)] = std::countr_zero(free);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (EdgeId e : pc.uncolored()) changed = repair(g, pc.colour, e) || changed;
  }
  if (fill_gaps(g, pc) && check_partial_coloring(g, pc).empty()) return pc;

  // The fixpoint is not good enough; take a minimum colouring instead.
  if (g.edge_count() > 64) throw Error("exact near 3-edge-colouring is limited to 64 edges");
  const int limit = static_cast<int>(pc.uncolored().size());
  for (int k = 0; k <= limit; ++k) {
    PartialThreeColoring best;
    const bool found = exact_search(g, k, [&](const Colours& col) {
      PartialThreeColoring cand;
      cand.colour = col;
      if (!fill_gaps(g, cand) || !check_partial_coloring(g, cand).empty()) return false;
      best = std::move(cand);
      return true;
    });
    if (found) {
      best.used_exact_fallback = true;
      return best;
    }
  }
  throw std::logic_error("no partial 3-edge-colouring satisfies the cycle invariants");
}

int ApproxResult::bound() const {
  const int n = mapping.target->vertex_count();
  return (4 * n + 4) / 5;
}

namespace {

struct Approx {
  ApproxStats stats;

  std::vector<EdgeId> colour(const PseudoGraph& g) {
    if (g.vertex_count() == 2) {
      // Three parallel edges onto the three bridges of S.
      return {0, 1, 2};
    }
    for (const Triangle& t : triangles(g)) {
      if (is_contractible(g, t)) return case1(g, t);
    }
    return case2(g);
  }

  std::vector<EdgeId> case1(const PseudoGraph& g, const Triangle& t) {
    ++stats.contractions;
    const Contraction c = contract_triangle(g, t);
    const std::vector<EdgeId> fc = colour(c.graph);
    std::vector<EdgeId> f(static_cast<std::size_t>(g.edge_count()), kNoEdge);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const EdgeId m = c.edge_map[static_cast<std::size_t>(e)];
      if (m != kNoEdge) f[static_cast<std::size_t>(e)] = fc[static_cast<std::size_t>(m)];
    }
    std::array<EdgeId, 3> outer{};
    std::array<EdgeId, 3> x{};
    for (int k = 0; k < 3; ++k) {
      const VertexId corner = t.vertices[static_cast<std::size_t>(k)];
      for (const Incidence& inc : g.incidence(corner)) {
        if (std::find(t.edges.begin(), t.edges.end(), inc.edge) == t.edges.end()) outer[static_cast<std::size_t>(k)] = inc.edge;
      }
      x[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(outer[static_cast<std::size_t>(k)])];
    }
    // Side s joins corners s and s+1, so it is opposite corner s+2.
    std::array<EdgeId, 3> sorted = x;
    std::sort(sorted.begin(), sorted.end());
    if (sylvester_tables().is_boundary(sorted)) {
      ++stats.satisfied_merges;
      for (int s = 0; s < 3; ++s) f[static_cast<std::size_t>(t.edges[static_cast<std::size_t>(s)])] = x[static_cast<std::size_t>((s + 2) % 3)];
      return f;
    }
    ++stats.failed_merges;
    int i = -1;
    int j = -1;
    for (int a = 0; a < 3 && i < 0; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (x[static_cast<std::size_t>(a)] == x[static_cast<std::size_t>(b)]) {
          i = a;
          j = b;
          break;
        }
      }
    }
    if (i < 0) throw std::logic_error("failed merged vertex without a repeated colour");
    const int k = 3 - i - j;
    const EdgeId xc = x[static_cast<std::size_t>(i)];
    const PseudoGraph& s = sylvester().graph;
    std::vector<EdgeId> around = s.half_edges(s.edge(xc).u);
    std::sort(around.begin(), around.end());
    around.erase(std::find(around.begin(), around.end(), xc));
    const EdgeId y = around[0];
    const EdgeId z = around[1];
    // Sides opposite corners i and j take y, the side between them z.
    for (int side = 0; side < 3; ++side) {
      const int opposite = (side + 2) % 3;
      f[static_cast<std::size_t>(t.edges[static_cast<std::size_t>(side)])] = (opposite == k) ? z : y;
    }
    return f;
  }

  std::vector<EdgeId> case2(const PseudoGraph& g) {
    struct TriBlock {
      std::array<EdgeId, 2> pair{};
      EdgeId xz = kNoEdge;
      EdgeId yz = kNoEdge;
      EdgeId bridge = kNoEdge;
      VertexId z = -1;
      VertexId root = -1;
    };
    std::vector<TriBlock> blocks;
    std::vector<char> in_block(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Triangle& t : triangles(g)) {
      TriBlock b;
      for (VertexId c : t.vertices) {
        in_block[static_cast<std::size_t>(c)] = 1;
        for (const Incidence& inc : g.incidence(c)) {
          const VertexId o = g.edge(inc.edge).other(c);
          if (std::find(t.vertices.begin(), t.vertices.end(), o) == t.vertices.end()) {
            b.z = c;
            b.root = o;
            b.bridge = inc.edge;
          }
        }
      }
      if (b.z < 0) throw std::logic_error("triangle block without a leaving edge");
      std::vector<VertexId> xy;
      for (VertexId c : t.vertices) {
        if (c != b.z) xy.push_back(c);
      }
      int p = 0;
      for (const Incidence& inc : g.incidence(xy[0])) {
        const EdgeRecord& r = g.edge(inc.edge);
        if (r.touches(xy[1])) {
          if (p < 2) b.pair[static_cast<std::size_t>(p)] = inc.edge;
          ++p;
        } else if (r.touches(b.z)) {
          b.xz = inc.edge;
        }
      }
      for (const Incidence& inc : g.incidence(xy[1])) {
        if (g.edge(inc.edge).touches(b.z) && !g.edge(inc.edge).touches(xy[0])) b.yz = inc.edge;
      }
      if (p != 2 || b.xz == kNoEdge || b.yz == kNoEdge) throw std::logic_error("non-contractible triangle is not an end-block of S shape");
      std::sort(b.pair.begin(), b.pair.end());
      blocks.push_back(b);
    }
    stats.triangle_blocks = static_cast<int>(blocks.size());
    std::vector<EdgeId> f(static_cast<std::size_t>(g.edge_count()), kNoEdge);
    auto place = [&](const TriBlock& b, int d) {
      f[static_cast<std::size_t>(b.bridge)] = d;
      f[static_cast<std::size_t>(b.pair[0])] = 3 + 4 * d;
      f[static_cast<std::size_t>(b.pair[1])] = 4 + 4 * d;
      f[static_cast<std::size_t>(b.xz)] = 5 + 4 * d;
      f[static_cast<std::size_t>(b.yz)] = 6 + 4 * d;
    };
    for (const TriBlock& b : blocks) {
      if (in_block[static_cast<std::size_t>(b.root)]) {
        // Two blocks joined by their bridge: both go onto the same end-block
        // of S and the bridge onto its bridge.
        stats.dumbbell = true;
        for (const TriBlock& each : blocks) place(each, 0);
        return f;
      }
    }

    std::vector<VertexId> keep;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (!in_block[static_cast<std::size_t>(x)]) keep.push_back(x);
    }
    std::vector<EdgeId> edge_map;
    const PseudoGraph rest = induced_subgraph(g, keep, &edge_map);
    const PartialThreeColoring pc = near_3_edge_coloring(rest);
    stats.exact_fallback = stats.exact_fallback || pc.used_exact_fallback;
    Colours col = pc.colour;
    const std::vector<EdgeId> un = pc.uncolored();
    stats.uncolored = static_cast<int>(un.size());
    // Give each uncoloured edge the colour its lower endpoint lacks; the
    // other endpoint already has it and fails.
    for (EdgeId e : un) {
      const unsigned m = missing(rest, col, rest.edge(e).u);
      col[static_cast<std::size_t>(e)] = std::countr_zero(m);
    }
    for (EdgeId e = 0; e < rest.edge_count(); ++e) {
      f[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(e)])] = col[static_cast<std::size_t>(e)];
    }
    for (const TriBlock& b : blocks) {
      unsigned used = 0;
      for (const Incidence& inc : g.incidence(b.root)) {
        const EdgeId c = f[static_cast<std::size_t>(inc.edge)];
        if (c != kNoEdge) used |= 1u << c;
      }
      const unsigned free = 7u & ~used;
      if (free == 0) throw std::logic_error("no colour left for a triangle block bridge");
      place(b, std::countr_zero(free));
    }
    return f;
  }
};

}  // namespace

ApproxResult approx_s_coloring(const PseudoGraph& g) {
  if (g.loop_count() != 0) throw PreconditionError("S-colouring approximation needs a loop-free graph");
  if (!is_cubic(g)) throw PreconditionError("S-colouring approximation needs a cubic graph");
  if (!is_connected(g)) throw DisconnectedGraphError();
  Approx a;
  const std::vector<EdgeId> f = a.colour(g);
  ApproxResult r;
  r.mapping = EdgeMapping::blank(std::make_shared<const PseudoGraph>(g),
                                 std::make_shared<const PseudoGraph>(sylvester().graph));
  for (EdgeId e = 0; e < g.edge_count(); ++e) r.mapping.images[static_cast<std::size_t>(e)][0] = f[static_cast<std::size_t>(e)];
  r.report = satisfaction(r.mapping);
  r.stats = a.stats;
  return r;
}

std::vector<FailureWitness> failure_witnesses(const ApproxResult& r) {
  std::vector<FailureWitness> out;
  for (const VertexFailure& fail : r.report.failures) {
    if (!fail.witness) throw std::logic_error("failed vertex " + std::to_string(fail.vertex) + " has no repeated colour");
    out.push_back({fail.vertex, *fail.witness});
  }
  return out;
}

std::string approx_to_json(const ApproxResult& r) {
  const int n = r.mapping.target->vertex_count();
  nlohmann::json witnesses = nlohmann::json::array();
  for (const FailureWitness& w : failure_witnesses(r)) {
    witnesses.push_back({{"vertex", w.vertex}, {"edges", {w.edges[0], w.edges[1]}}});
  }
  nlohmann::json assignment = nlohmann::json::array();
  for (EdgeId e = 0; e < r.mapping.target->edge_count(); ++e) {
    const EdgeId h = r.mapping.images[static_cast<std::size_t>(e)][0];
    assignment.push_back({e, sylvester().edge_labels[static_cast<std::size_t>(h)]});
  }
  nlohmann::json j{{"n", n},
                   {"satisfied", r.satisfied()},
                   {"bound", r.bound()},
                   {"uncolored", r.stats.uncolored},
                   {"witnesses", std::move(witnesses)},
                   {"assignment", std::move(assignment)}};
  return j.dump();
}

}  // namespace sylvan
