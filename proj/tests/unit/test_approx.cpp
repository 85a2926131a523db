#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "sylvan/approx.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/structure.hpp"

using namespace sylvan;
using fixtures::named;

TEST_CASE("near 3-edge-colourings") {
  const PartialThreeColoring cube = near_3_edge_coloring(fixtures::cube());
  CHECK(cube.uncolored().empty());
  CHECK(check_partial_coloring(fixtures::cube(), cube).empty());

  const PseudoGraph p = named(AtlasName::kPetersen);
  const PartialThreeColoring c = near_3_edge_coloring(p);
  CHECK(check_partial_coloring(p, c).empty());
  REQUIRE(c.gaps.size() == 2);
  std::set<VertexId> seen;
  for (const auto& gap : c.gaps) {
    CHECK(gap.cycle.size() == 5);
    CHECK(gap.alpha != gap.beta);
    for (EdgeId e : gap.cycle) {
      seen.insert(p.edge(e).u);
      seen.insert(p.edge(e).v);
    }
  }
  CHECK(seen.size() == 10);  // two disjoint pentagons

  CHECK_THROWS_AS(near_3_edge_coloring(named(AtlasName::kK4)), PreconditionError);
  CHECK_THROWS_AS(near_3_edge_coloring(named(AtlasName::kSylvester4)), PreconditionError);
}

TEST_CASE("triangle-free graphs up to 10 vertices") {
  for (const auto& g : fixtures::simple_up_to_10()) {
    if (!triangles(g).empty()) continue;
    const PartialThreeColoring c = near_3_edge_coloring(g);
    CHECK(check_partial_coloring(g, c).empty());
  }
}

TEST_CASE("Petersen") {
  const ApproxResult r = approx_s_coloring(named(AtlasName::kPetersen));
  CHECK(r.bound() == 8);
  CHECK(r.satisfied() == 8);
  CHECK(r.stats.uncolored == 2);
  CHECK(r.report.failures.size() == 2);
  const auto w = failure_witnesses(r);
  REQUIRE(w.size() == 2);
  for (const FailureWitness& x : w) {
    CHECK(r.mapping.images[static_cast<std::size_t>(x.edges[0])][0] ==
          r.mapping.images[static_cast<std::size_t>(x.edges[1])][0]);
    CHECK(x.edges[0] != x.edges[1]);
  }
}

TEST_CASE("graphs with an S-colouring of every vertex") {
  for (AtlasName n : {AtlasName::kSylvester10, AtlasName::kK4, AtlasName::kPrism, AtlasName::kK33,
                      AtlasName::kDumbbell6, AtlasName::kSylvester16}) {
    const PseudoGraph g = named(n);
    const ApproxResult r = approx_s_coloring(g);
    CHECK(r.report.complete());
    CHECK(r.satisfied() == g.vertex_count());
  }
  CHECK(approx_s_coloring(named(AtlasName::kDumbbell6)).stats.dumbbell);
  CHECK(approx_s_coloring(named(AtlasName::kK4)).stats.contractions >= 1);
}

TEST_CASE("bound and failure accounting on small corpora") {
  auto check = [](const PseudoGraph& g) {
    const ApproxResult r = approx_s_coloring(g);
    CHECK(r.satisfied() >= r.bound());
    CHECK(static_cast<int>(r.report.failures.size()) == r.stats.uncolored);
    CHECK(failure_witnesses(r).size() == r.report.failures.size());
    CHECK(r.mapping.host->vertex_count() == 10);
  };
  for (const auto& g : fixtures::simple_up_to_10()) check(g);
  for (const auto& g : fixtures::multi_up_to_8()) check(g);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(approx_s_coloring(named(AtlasName::kSylvester4)), PreconditionError);
  CHECK_THROWS_AS(approx_s_coloring(fixtures::make(3, {{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("json") {
  const std::string j = approx_to_json(approx_s_coloring(named(AtlasName::kPetersen)));
  CHECK(j.find("\"satisfied\":8") != std::string::npos);
  CHECK(j.find("\"bound\":8") != std::string::npos);
  CHECK(j.find("\"witnesses\"") != std::string::npos);
}
