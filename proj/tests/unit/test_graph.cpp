#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sylvan/canonical.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/structure.hpp"

using namespace sylvan;
using fixtures::make;
using fixtures::named;

TEST_CASE("degree counts loops twice") {
  CHECK(degree(make(1, {{0, 0}}), 0) == 2);
  CHECK(degree(named(AtlasName::kK4), 2) == 3);
  CHECK(degree(make(2, {{0, 1}}), 0) == 1);
  const PseudoGraph s4 = named(AtlasName::kSylvester4);
  CHECK(s4.incidence(1).size() == 2);
  CHECK(s4.half_edges(1).size() == 3);
}

TEST_CASE("degree sum is twice the edge count") {
  for (const auto& g : fixtures::pseudo_up_to_8()) {
    int sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) sum += degree(g, v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("is_cubic") {
  CHECK(is_cubic(named(AtlasName::kPetersen)));
  CHECK_FALSE(is_cubic(without_edge(named(AtlasName::kK4), 0)));
  CHECK(is_cubic(named(AtlasName::kSylvester4)));
  CHECK(named(AtlasName::kSylvester4).loop_count() == 3);
}

TEST_CASE("graph classes") {
  CHECK(named(AtlasName::kPetersen).graph_class() == GraphClass::kSimple);
  CHECK(named(AtlasName::kSylvester10).graph_class() == GraphClass::kMultigraph);
  CHECK(named(AtlasName::kSylvester4).graph_class() == GraphClass::kPseudograph);
  CHECK(defect_count(fixtures::theta()) == 2);
  CHECK(defect_count(named(AtlasName::kSylvester4)) == 3);
}

TEST_CASE("edge ids are dense and parallel edges stay apart") {
  PseudoGraph g(2);
  CHECK(g.add_edge(1, 0) == 0);
  CHECK(g.add_edge(0, 1) == 1);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.has_parallel_edges());
}

TEST_CASE("block tree of Petersen") {
  const BlockTree bt = block_tree(named(AtlasName::kPetersen));
  CHECK(bt.blocks.size() == 1);
  CHECK(bt.bridges.empty());
  CHECK(bt.cut_vertices.empty());
  CHECK(bt.end_blocks.empty());
}

TEST_CASE("block tree of the Sylvester graph") {
  const PseudoGraph s = named(AtlasName::kSylvester10);
  const BlockTree bt = block_tree(s);
  CHECK(bt.bridges == std::vector<EdgeId>{0, 1, 2});
  REQUIRE(bt.end_blocks.size() == 3);
  // The centre and the three block vertices carrying a bridge.
  CHECK(bt.cut_vertices == std::vector<VertexId>{0, 3, 6, 9});
  for (const EndBlock& eb : bt.end_blocks) {
    CHECK(eb.root == 0);
    const Block& b = bt.blocks[static_cast<std::size_t>(eb.block)];
    CHECK(b.vertices.size() == 3);
    CHECK(std::count(b.vertices.begin(), b.vertices.end(), eb.attachment) == 1);
    CHECK(std::count(b.vertices.begin(), b.vertices.end(), eb.root) == 0);
    const EdgeRecord& br = s.edge(eb.bridge);
    CHECK(br.touches(eb.root));
    CHECK(br.touches(eb.attachment));
  }
}

TEST_CASE("block tree of S16") {
  const BlockTree bt = block_tree(named(AtlasName::kSylvester16));
  CHECK(bt.bridges.size() == 3);
  REQUIRE(bt.end_blocks.size() == 3);
  for (const EndBlock& eb : bt.end_blocks) {
    CHECK(bt.blocks[static_cast<std::size_t>(eb.block)].vertices.size() == 5);
  }
}

TEST_CASE("block tree rejects disconnected input") {
  CHECK_THROWS_AS(block_tree(make(4, {{0, 1}, {2, 3}})), DisconnectedGraphError);
}

TEST_CASE("bridges disconnect and nothing else does") {
  for (const auto& g : fixtures::multi_up_to_8()) {
    const std::vector<EdgeId> br = bridges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const bool is_bridge = std::binary_search(br.begin(), br.end(), e);
      CHECK(is_connected(without_edge(g, e)) != is_bridge);
    }
  }
  for (const auto& g : fixtures::simple_up_to_10()) {
    const std::vector<EdgeId> br = bridges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(is_connected(without_edge(g, e)) != std::binary_search(br.begin(), br.end(), e));
    }
  }
}

TEST_CASE("parallel edges and loops are never bridges") {
  CHECK(bridges(fixtures::theta()).empty());
  const PseudoGraph s4 = named(AtlasName::kSylvester4);
  CHECK(bridges(s4) == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("triangles") {
  CHECK(triangles(named(AtlasName::kPetersen)).empty());
  CHECK(triangles(named(AtlasName::kK4)).size() == 4);
  const auto ts = triangles(named(AtlasName::kSylvester10));
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].vertices == std::array<VertexId, 3>{1, 2, 3});
  // Lowest id among the doubled pair.
  CHECK(ts[0].edges[0] == 3);
  for (const auto& g : fixtures::simple_up_to_10()) {
    for (const Triangle& t : triangles(g)) CHECK(is_triangle_of(g, t));
  }
}

TEST_CASE("contractible triangles") {
  const PseudoGraph k4 = named(AtlasName::kK4);
  for (const Triangle& t : triangles(k4)) CHECK(is_contractible(k4, t));
  const PseudoGraph s = named(AtlasName::kSylvester10);
  for (const Triangle& t : triangles(s)) CHECK_FALSE(is_contractible(s, t));
  const PseudoGraph d = named(AtlasName::kDumbbell6);
  const auto dt = triangles(d);
  CHECK(dt.size() == 2);
  for (const Triangle& t : dt) {
    CHECK_FALSE(is_contractible(d, t));
    CHECK(contract_triangle(d, t).graph.loop_count() > 0);
  }
  Triangle bogus{{0, 1, 2}, {0, 1, 2}};
  CHECK_THROWS_AS(is_contractible(named(AtlasName::kPetersen), bogus), PreconditionError);
}

TEST_CASE("contracting K4 gives the theta graph") {
  const PseudoGraph k4 = named(AtlasName::kK4);
  const Contraction c = contract_triangle(k4, triangles(k4)[0]);
  CHECK(c.graph.vertex_count() == 2);
  CHECK(c.graph.multiplicity(0, 1) == 3);
  CHECK(c.merged == 1);
  CHECK(is_cubic(c.graph));
}

TEST_CASE("contracting a Sylvester end-block makes a loop") {
  const PseudoGraph s = named(AtlasName::kSylvester10);
  const Contraction c = contract_triangle(s, triangles(s)[0]);
  CHECK(c.graph.loop_count() == 1);
  CHECK(is_cubic(c.graph));
  CHECK(c.graph.vertex_count() == 8);
}

TEST_CASE("contracting a prism triangle gives K4") {
  const PseudoGraph prism = named(AtlasName::kPrism);
  const Contraction c = contract_triangle(prism, triangles(prism)[0]);
  CHECK(is_cubic(c.graph));
  CHECK(degree(c.graph, c.merged) == 3);
  CHECK(is_isomorphic(c.graph, named(AtlasName::kK4)));
  int sides = 0;
  for (EdgeId e : c.edge_map) sides += e == kNoEdge;
  CHECK(sides == 3);
}

TEST_CASE("contraction keeps cubicity and drops two vertices") {
  for (const auto& g : fixtures::multi_up_to_8()) {
    for (const Triangle& t : triangles(g)) {
      const Contraction c = contract_triangle(g, t);
      CHECK(is_cubic(c.graph));
      CHECK(c.graph.vertex_count() == g.vertex_count() - 2);
      CHECK(c.graph.edge_count() == g.edge_count() - 3);
    }
  }
}

TEST_CASE("opposite edges") {
  const PseudoGraph prism = named(AtlasName::kPrism);
  const Triangle t = triangles(prism)[0];  // {0, 1, 2}
  // Side (0,1) is opposite the spoke leaving 2.
  CHECK(opposite_edge(prism, t, 0) == 8);
  CHECK(opposite_edge(prism, t, 1) == 6);
  CHECK(opposite_edge(prism, t, 2) == 7);

  const PseudoGraph k4 = named(AtlasName::kK4);
  for (const Triangle& tk : triangles(k4)) {
    std::vector<EdgeId> opp;
    for (EdgeId side : tk.edges) {
      const EdgeId o = opposite_edge(k4, tk, side);
      const EdgeRecord& s = k4.edge(side);
      const EdgeRecord& r = k4.edge(o);
      CHECK_FALSE(r.touches(s.u));
      CHECK_FALSE(r.touches(s.v));
      opp.push_back(o);
    }
    std::sort(opp.begin(), opp.end());
    CHECK(std::adjacent_find(opp.begin(), opp.end()) == opp.end());
  }
  CHECK_THROWS_AS(opposite_edge(prism, t, 3), PreconditionError);
  const PseudoGraph s = named(AtlasName::kSylvester10);
  CHECK_THROWS_AS(opposite_edge(s, triangles(s)[0], 3), PreconditionError);
}

TEST_CASE("induced subgraph and relabel") {
  const PseudoGraph p = named(AtlasName::kPetersen);
  std::vector<EdgeId> map;
  const std::vector<VertexId> outer{0, 1, 2, 3, 4};
  const PseudoGraph c5 = induced_subgraph(p, outer, &map);
  CHECK(c5.edge_count() == 5);
  CHECK(map == std::vector<EdgeId>{0, 1, 2, 3, 4});
  std::mt19937_64 rng(7);
  const PseudoGraph r = relabeled(p, fixtures::random_perm(10, rng));
  CHECK(r.edge_count() == 15);
  CHECK(is_cubic(r));
}
