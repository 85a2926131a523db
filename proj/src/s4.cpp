#include "sylvan/s4.hpp"

#include <algorithm>
#include <memory>

#include <json.hpp>

#include "sylvan/atlas.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/factors.hpp"
#include "sylvan/structure.hpp"

namespace sylvan {

const char* to_string(S4Color c) {
  switch (c) {
    case S4Color::kA:
      return "a";
    case S4Color::kB:
      return "b";
    case S4Color::kC:
      return "c";
    case S4Color::kAPrime:
      return "a'";
    case S4Color::kBPrime:
      return "b'";
    case S4Color::kCPrime:
      return "c'";
  }
  return "?";
}

S4Color parse_s4_color(const std::string& text) {
  for (int i = 0; i < 6; ++i) {
    if (text == to_string(static_cast<S4Color>(i))) return static_cast<S4Color>(i);
  }
  throw ParseError("unknown S4 colour '" + text + "'");
}

namespace {

// Colours 0..2 are a, b, c and 3..5 their primes.
using Colours = std::vector<int>;

int prime(int d) { return d + 3; }

struct Builder {
  S4Stats stats;

  // Every vertex of `keep` in order, with the induced edges in id order.
  static PseudoGraph block_graph(const PseudoGraph& g, const Block& b, std::vector<EdgeId>& edge_map) {
    return induced_subgraph(g, b.vertices, &edge_map);
  }

  void colour_end_block(const PseudoGraph& g, const Block& b, EdgeId bridge, int d, int factor_colour,
                        Colours& out) {
    std::vector<EdgeId> edge_map;
    const PseudoGraph bg = block_graph(g, b, edge_map);
    const TwoFactor f = end_block_2_factor(bg);
    for (EdgeId e = 0; e < bg.edge_count(); ++e) out[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(e)])] = d;
    for (EdgeId e : f.edges) out[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(e)])] = factor_colour;
    out[static_cast<std::size_t>(bridge)] = d;
  }

  // Loop-free connected cubic graph.
  Colours colour(const PseudoGraph& g) {
    const std::vector<EdgeId> br = bridges(g);
    Colours col(static_cast<std::size_t>(g.edge_count()), -1);
    if (br.size() <= 2) {
      ++stats.one_factor_steps;
      const auto m = find_1_factor(g);
      if (!m) throw std::logic_error("cubic graph with at most two bridges has no 1-factor");
      std::fill(col.begin(), col.end(), prime(0));
      for (EdgeId e : m->edges) col[static_cast<std::size_t>(e)] = 0;
      return col;
    }
    const BlockTree bt = block_tree(g);
    const auto& ends = bt.end_blocks;
    auto adjacent = [&](const EdgeRecord& x, const EdgeRecord& y) {
      return x.touches(y.u) || x.touches(y.v);
    };
    for (std::size_t i = 0; i < ends.size(); ++i) {
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        if (!adjacent(g.edge(ends[i].bridge), g.edge(ends[j].bridge))) return case2(g, bt, ends[i], ends[j]);
      }
    }
    // Case 1: every pair of end-block bridges meets, which forces three
    // end-blocks hanging off one vertex.
    if (ends.size() != 3 || ends[0].root != ends[1].root || ends[1].root != ends[2].root) {
      throw std::logic_error("end-block bridges pairwise adjacent without a common root");
    }
    ++stats.case1;
    for (int i = 0; i < 3; ++i) {
      colour_end_block(g, bt.blocks[static_cast<std::size_t>(ends[static_cast<std::size_t>(i)].block)],
                       ends[static_cast<std::size_t>(i)].bridge, i, prime(i), col);
    }
    return col;
  }

  Colours case2(const PseudoGraph& g, const BlockTree& bt, const EndBlock& eb, const EndBlock& eb2) {
    const Block& b = bt.blocks[static_cast<std::size_t>(eb.block)];
    const Block& b2 = bt.blocks[static_cast<std::size_t>(eb2.block)];
    const VertexId u = eb.root;
    const VertexId v = eb2.root;

    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId x : b.vertices) removed[static_cast<std::size_t>(x)] = 1;
    for (VertexId x : b2.vertices) removed[static_cast<std::size_t>(x)] = 1;
    std::vector<VertexId> keep;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (!removed[static_cast<std::size_t>(x)]) keep.push_back(x);
    }
    std::vector<EdgeId> edge_map;
    PseudoGraph h = induced_subgraph(g, keep, &edge_map);
    const VertexId hu = static_cast<VertexId>(std::find(keep.begin(), keep.end(), u) - keep.begin());
    const VertexId hv = static_cast<VertexId>(std::find(keep.begin(), keep.end(), v) - keep.begin());
    const EdgeId link = h.add_edge(hu, hv);

    const Colours hc = colour(h);
    Colours col(static_cast<std::size_t>(g.edge_count()), -1);
    for (EdgeId e = 0; e < link; ++e) col[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(e)])] = hc[static_cast<std::size_t>(e)];

    const int g_uv = hc[static_cast<std::size_t>(link)];
    if (g_uv < 3) {
      ++stats.case21;
      colour_end_block(g, b, eb.bridge, g_uv, prime(g_uv), col);
      colour_end_block(g, b2, eb2.bridge, g_uv, prime(g_uv), col);
      return col;
    }

    ++stats.case22;
    const int p = g_uv - 3;
    const int q = (p + 1) % 3;
    const int r = (p + 2) % 3;
    // Walk the p'-cycle through the link from u to v, avoiding the link.
    std::vector<EdgeId> path;
    VertexId at = hu;
    EdgeId came = link;
    while (at != hv || path.empty()) {
      EdgeId next = kNoEdge;
      for (const Incidence& inc : h.incidence(at)) {
        if (inc.edge != came && inc.edge != link && hc[static_cast<std::size_t>(inc.edge)] == g_uv) {
          next = inc.edge;
          break;
        }
      }
      if (next == kNoEdge) throw std::logic_error("primed colour class is not a union of cycles");
      path.push_back(next);
      at = h.edge(next).other(at);
      came = next;
      if (path.size() > static_cast<std::size_t>(h.edge_count())) throw std::logic_error("runaway cycle walk");
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      col[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(path[i])])] = (i % 2 == 0) ? r : q;
    }
    const int d = (path.size() % 2 == 1) ? q : r;
    colour_end_block(g, b, eb.bridge, q, prime(q), col);
    colour_end_block(g, b2, eb2.bridge, d, prime(d), col);
    return col;
  }
};

bool vertex_ok(std::vector<int> seen) {
  if (seen.size() != 3) return false;
  std::sort(seen.begin(), seen.end());
  if (seen[0] == 0 && seen[1] == 1 && seen[2] == 2) return true;
  return seen[0] < 3 && seen[1] == prime(seen[0]) && seen[2] == prime(seen[0]);
}

}  // namespace

S4Coloring s4_color(const PseudoGraph& g, S4Stats* stats) {
  if (!is_cubic(g)) throw PreconditionError("S4-colouring needs a cubic graph");
  if (!is_connected(g)) throw DisconnectedGraphError();

  // Replace each loop at w by a pendant triangle w-t2, w-t3, t2=t3 (doubled);
  // the loop later takes the colours of w-t2 and w-t3.
  PseudoGraph work(g.vertex_count());
  std::vector<EdgeId> plain(static_cast<std::size_t>(g.edge_count()), kNoEdge);
  std::vector<std::array<EdgeId, 2>> loop_edges(static_cast<std::size_t>(g.edge_count()), {kNoEdge, kNoEdge});
  Builder builder;
  for (const EdgeRecord& e : g.edges()) {
    if (!e.is_loop()) plain[static_cast<std::size_t>(e.id)] = work.add_edge(e.u, e.v);
  }
  int extra = 0;
  for (const EdgeRecord& e : g.edges()) {
    if (e.is_loop()) ++extra;
  }
  if (extra > 0) {
    builder.stats.loop_eliminations = extra;
    PseudoGraph grown(g.vertex_count() + 2 * extra);
    for (const EdgeRecord& e : work.edges()) grown.add_edge(e.u, e.v);
    VertexId next = g.vertex_count();
    for (const EdgeRecord& e : g.edges()) {
      if (!e.is_loop()) continue;
      const VertexId t2 = next++;
      const VertexId t3 = next++;
      loop_edges[static_cast<std::size_t>(e.id)] = {grown.add_edge(e.u, t2), grown.add_edge(e.u, t3)};
      grown.add_edge(t2, t3);
      grown.add_edge(t2, t3);
    }
    work = std::move(grown);
  }

  const Colours wc = builder.colour(work);
  S4Coloring out;
  out.colours.resize(static_cast<std::size_t>(g.edge_count()));
  for (const EdgeRecord& e : g.edges()) {
    auto& c = out.colours[static_cast<std::size_t>(e.id)];
    if (e.is_loop()) {
      const auto [x, y] = loop_edges[static_cast<std::size_t>(e.id)];
      c = {static_cast<S4Color>(wc[static_cast<std::size_t>(x)]), static_cast<S4Color>(wc[static_cast<std::size_t>(y)])};
      std::sort(c.begin(), c.end());
    } else {
      c = {static_cast<S4Color>(wc[static_cast<std::size_t>(plain[static_cast<std::size_t>(e.id)])])};
    }
  }
  if (!validate_s4(g, out).complete()) throw std::logic_error("S4 construction produced an invalid colouring");
  if (stats) *stats = builder.stats;
  return out;
}

SatisfactionReport validate_s4(const PseudoGraph& g, const S4Coloring& col) {
  if (col.colours.size() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("colouring does not cover every edge");
  }
  SatisfactionReport rep;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    std::vector<int> seen;
    std::vector<std::pair<int, EdgeId>> halves;
    for (const Incidence& inc : g.incidence(x)) {
      const auto& c = col.colours[static_cast<std::size_t>(inc.edge)];
      const std::size_t want = static_cast<std::size_t>(inc.multiplicity);
      if (c.size() != want) throw PreconditionError("edge " + std::to_string(inc.edge) + " has the wrong number of colours");
      for (S4Color s : c) {
        seen.push_back(static_cast<int>(s));
        halves.emplace_back(static_cast<int>(s), inc.edge);
      }
    }
    if (vertex_ok(seen)) {
      rep.satisfied.push_back(x);
      continue;
    }
    VertexFailure fail;
    fail.vertex = x;
    std::sort(seen.begin(), seen.end());
    fail.seen.assign(seen.begin(), seen.end());
    std::sort(halves.begin(), halves.end());
    for (std::size_t i = 1; i < halves.size(); ++i) {
      if (halves[i].first == halves[i - 1].first) {
        fail.witness = std::array<EdgeId, 2>{halves[i - 1].second, halves[i].second};
        break;
      }
    }
    rep.failures.push_back(std::move(fail));
  }
  return rep;
}

EdgeMapping s4_mapping(const PseudoGraph& g, const S4Coloring& col) {
  auto host = std::make_shared<const PseudoGraph>(atlas(AtlasName::kSylvester4).graph);
  EdgeMapping f = EdgeMapping::blank(std::make_shared<const PseudoGraph>(g), host);
  for (const EdgeRecord& e : g.edges()) {
    const auto& c = col.colours.at(static_cast<std::size_t>(e.id));
    auto& img = f.images[static_cast<std::size_t>(e.id)];
    img[0] = static_cast<EdgeId>(c.at(0));
    if (e.is_loop()) img[1] = static_cast<EdgeId>(c.at(1));
  }
  return f;
}

std::string s4_to_json(const PseudoGraph& g, const S4Coloring& col) {
  nlohmann::json edges = nlohmann::json::object();
  for (const EdgeRecord& e : g.edges()) {
    const auto& c = col.colours.at(static_cast<std::size_t>(e.id));
    if (e.is_loop()) {
      edges[std::to_string(e.id)] = {to_string(c.at(0)), to_string(c.at(1))};
    } else {
      edges[std::to_string(e.id)] = to_string(c.at(0));
    }
  }
  nlohmann::json j{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
  j["valid"] = validate_s4(g, col).complete();
  return j.dump();
}

}  // namespace sylvan
