#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "sylvan/canonical.hpp"

using namespace sylvan;
using fixtures::named;

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(20240611);
  std::vector<PseudoGraph> graphs;
  for (AtlasName n : all_atlas_names()) graphs.push_back(named(n));
  graphs.push_back(fixtures::cube());
  for (const PseudoGraph& g : graphs) {
    const CanonicalCode code = canonical_code(g);
    for (int i = 0; i < 100; ++i) {
      CHECK(canonical_code(relabeled(g, fixtures::random_perm(g.vertex_count(), rng))) == code);
    }
  }
}

TEST_CASE("canonical codes separate the enumerated classes") {
  std::set<CanonicalCode> codes;
  for (const auto& g : fixtures::pseudo_up_to_8()) codes.insert(canonical_code(g));
  CHECK(codes.size() == fixtures::pseudo_up_to_8().size());
}

TEST_CASE("isomorphism examples") {
  const PseudoGraph p = named(AtlasName::kPetersen);
  std::mt19937_64 rng(3);
  CHECK(is_isomorphic(p, relabeled(p, fixtures::random_perm(10, rng))));
  CHECK_FALSE(is_isomorphic(named(AtlasName::kK33), named(AtlasName::kPrism)));
  CHECK_FALSE(is_isomorphic(p, named(AtlasName::kSPrime)));
}

TEST_CASE("S16 built with its blocks in another order") {
  // Blocks listed last-first with vertex numbering reversed inside.
  PseudoGraph g(16);
  for (int d = 2; d >= 0; --d) {
    const int v1 = 15 - 5 * d;  // v_i = v1 - (i - 1)
    auto v = [&](int i) { return v1 - (i - 1); };
    g.add_edge(v(5), 0);
    for (auto [i, j] : {std::pair{4, 5}, {3, 5}, {2, 4}, {2, 3}, {1, 4}, {1, 3}, {1, 2}}) g.add_edge(v(i), v(j));
  }
  CHECK(is_isomorphic(g, named(AtlasName::kSylvester16)));
  CHECK(canonical_code(g) == canonical_code(named(AtlasName::kSylvester16)));
}

TEST_CASE("loops and multiplicities are part of the code") {
  const PseudoGraph a = fixtures::make(2, {{0, 0}, {0, 1}, {1, 1}});
  const PseudoGraph b = fixtures::theta();
  CHECK(canonical_code(a) != canonical_code(b));
  CHECK(canonical_code(a)[0] == 2);
}

TEST_CASE("automorphism group sizes") {
  CHECK(automorphisms(named(AtlasName::kPetersen)).size() == 120);
  CHECK(automorphisms(named(AtlasName::kK4)).size() == 24);
  CHECK(automorphisms(named(AtlasName::kK33)).size() == 72);
  CHECK(automorphisms(named(AtlasName::kPrism)).size() == 12);
  // Vertex automorphisms only; parallel edge swaps are not counted.
  CHECK(automorphisms(named(AtlasName::kSylvester10)).size() == 48);
}

TEST_CASE("edge orbits") {
  const auto po = edge_orbits(named(AtlasName::kPetersen));
  CHECK(std::set<int>(po.begin(), po.end()).size() == 1);
  const auto so = edge_orbits(named(AtlasName::kSylvester10));
  // Bridges, doubled pairs, and the two single block edges.
  CHECK(std::set<int>(so.begin(), so.end()).size() == 3);
  const auto prism = edge_orbits(named(AtlasName::kPrism));
  CHECK(std::set<int>(prism.begin(), prism.end()).size() == 2);
}
