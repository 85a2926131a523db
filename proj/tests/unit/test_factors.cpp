#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/factors.hpp"
#include "sylvan/structure.hpp"

using namespace sylvan;
using fixtures::make;
using fixtures::named;

namespace {

// Components of the subgraph formed by `edges`, as vertex counts.
std::multiset<int> cycle_lengths(const PseudoGraph& g, const std::vector<EdgeId>& edges) {
  PseudoGraph sub(g.vertex_count());
  for (EdgeId e : edges) sub.add_edge(g.edge(e).u, g.edge(e).v);
  int count = 0;
  const std::vector<int> comp = connected_components(sub, &count);
  std::vector<int> size(static_cast<std::size_t>(count), 0);
  for (int c : comp) ++size[static_cast<std::size_t>(c)];
  return {size.begin(), size.end()};
}

// 3-edge-colourable iff some perfect matching leaves only even cycles.
bool colourable_by_matchings(const PseudoGraph& g) {
  bool found = false;
  for_each_perfect_matching(g, [&](const std::vector<EdgeId>& m) {
    if (found) return;
    const TwoFactor f = complementary_2_factor(g, Matching{m});
    bool even = true;
    for (int len : cycle_lengths(g, f.edges)) even = even && len % 2 == 0;
    found = even;
  });
  return found;
}

}  // namespace

TEST_CASE("maximum matching sizes") {
  CHECK(maximum_matching(named(AtlasName::kPetersen)).edges.size() == 5);
  CHECK(maximum_matching(named(AtlasName::kSylvester16)).edges.size() == 7);
  CHECK(maximum_matching(make(1, {{0, 0}})).edges.empty());
  CHECK(maximum_matching(fixtures::theta()).edges == std::vector<EdgeId>{0});
  for (const auto& g : fixtures::simple_up_to_10()) {
    const Matching m = maximum_matching(g);
    CHECK(is_matching(g, m.edges));
  }
}

TEST_CASE("blossoms: odd cycles with a pendant path") {
  // A 5-cycle with a tail forces a blossom contraction.
  const PseudoGraph g = make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
  CHECK(maximum_matching(g).edges.size() == 3);
  const PseudoGraph two = make(8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}, {0, 6}, {5, 7}});
  CHECK(maximum_matching(two).edges.size() == 4);
}

TEST_CASE("find_1_factor") {
  const auto k4 = find_1_factor(named(AtlasName::kK4));
  REQUIRE(k4.has_value());
  CHECK(is_perfect_matching(named(AtlasName::kK4), k4->edges));
  CHECK_FALSE(find_1_factor(named(AtlasName::kSylvester16)).has_value());
}

TEST_CASE("cubic graphs with at most two bridges have a 1-factor") {
  for (const auto& list : {fixtures::simple_up_to_10(), fixtures::multi_up_to_8()}) {
    for (const auto& g : list) {
      if (bridges(g).size() <= 2) CHECK(find_1_factor(g).has_value());
    }
  }
}

TEST_CASE("complementary 2-factor") {
  const PseudoGraph k4 = named(AtlasName::kK4);
  const Matching m = *find_1_factor(k4);
  const TwoFactor f = complementary_2_factor(k4, m);
  CHECK(is_two_factor(k4, f.edges));
  CHECK(cycle_lengths(k4, f.edges) == std::multiset<int>{4});
  CHECK(m.edges.size() + f.edges.size() == 6);

  const PseudoGraph p = named(AtlasName::kPetersen);
  const TwoFactor pf = complementary_2_factor(p, Matching{{5, 6, 7, 8, 9}});
  CHECK(cycle_lengths(p, pf.edges) == std::multiset<int>{5, 5});

  // Loop vertex: the loop belongs to the 2-factor with weight 2.
  const PseudoGraph d = fixtures::make(4, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 3}});
  const TwoFactor df = complementary_2_factor(d, Matching{{0, 4}});
  CHECK(is_two_factor(d, df.edges));
  CHECK(std::count(df.edges.begin(), df.edges.end(), 5) == 1);

  CHECK_THROWS_AS(complementary_2_factor(k4, Matching{{0}}), PreconditionError);
}

TEST_CASE("matching and complement partition the edges") {
  for (const auto& g : fixtures::simple_up_to_10()) {
    const Matching m = *find_1_factor(g);
    const TwoFactor f = complementary_2_factor(g, m);
    std::set<EdgeId> all(m.edges.begin(), m.edges.end());
    all.insert(f.edges.begin(), f.edges.end());
    CHECK(all.size() == static_cast<std::size_t>(g.edge_count()));
    CHECK(m.edges.size() + f.edges.size() == static_cast<std::size_t>(g.edge_count()));
  }
}

TEST_CASE("end-block 2-factors") {
  // The 5-vertex S16 block: v5 has degree 2.
  const PseudoGraph penta = make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const TwoFactor f = end_block_2_factor(penta);
  CHECK(is_two_factor(penta, f.edges));
  CHECK(f.edges.size() == 5);
  // The 3-vertex S block: the triangle through one copy of the doubled pair.
  const PseudoGraph tri = make(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}});
  const TwoFactor t = end_block_2_factor(tri);
  CHECK(is_two_factor(tri, t.edges));
  CHECK(t.edges.size() == 3);
  CHECK(std::count(t.edges.begin(), t.edges.end(), 2) == 1);
  CHECK(std::count(t.edges.begin(), t.edges.end(), 3) == 1);
  // K4 minus an edge has two vertices of degree 2.
  CHECK_THROWS_AS(end_block_2_factor(without_edge(named(AtlasName::kK4), 0)), PreconditionError);
}

TEST_CASE("chromatic index") {
  CHECK(chromatic_index_cubic(named(AtlasName::kK4)).value == 3);
  CHECK(chromatic_index_cubic(named(AtlasName::kPetersen)).value == 4);
  CHECK(chromatic_index_cubic(named(AtlasName::kSPrime)).value == 4);
  CHECK(chromatic_index_cubic(named(AtlasName::kSylvester10)).value == 4);  // bridged
  CHECK_THROWS_AS(chromatic_index_cubic(named(AtlasName::kSylvester4)), PreconditionError);
  const auto w = chromatic_index_cubic(fixtures::cube());
  REQUIRE(w.witness.has_value());
  const PseudoGraph q3 = fixtures::cube();
  for (VertexId v = 0; v < q3.vertex_count(); ++v) {
    std::set<int> seen;
    for (const Incidence& inc : q3.incidence(v)) seen.insert(w.witness->colour[static_cast<std::size_t>(inc.edge)]);
    CHECK(seen.size() == 3);
  }
}

TEST_CASE("chromatic index agrees with the matching criterion") {
  for (const auto& list : {fixtures::simple_up_to_10(), fixtures::multi_up_to_8()}) {
    for (const auto& g : list) {
      CHECK((chromatic_index_cubic(g).value == 3) == colourable_by_matchings(g));
    }
  }
}

TEST_CASE("perfect matching enumeration") {
  int k4 = 0;
  for_each_perfect_matching(named(AtlasName::kK4), [&](const std::vector<EdgeId>&) { ++k4; });
  CHECK(k4 == 3);
  int p = 0;
  for_each_perfect_matching(named(AtlasName::kPetersen), [&](const std::vector<EdgeId>& m) {
    ++p;
    CHECK(is_perfect_matching(named(AtlasName::kPetersen), m));
  });
  CHECK(p == 6);
  int theta = 0;
  for_each_perfect_matching(fixtures::theta(), [&](const std::vector<EdgeId>&) { ++theta; });
  CHECK(theta == 3);
}
