#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "sylvan/canonical.hpp"
#include "sylvan/factors.hpp"
#include "sylvan/structure.hpp"

using namespace sylvan;
using fixtures::named;

TEST_CASE("atlas graphs are connected and cubic with unique labels") {
  for (AtlasName n : all_atlas_names()) {
    CAPTURE(to_string(n));
    const LabeledAtlasGraph a = atlas(n);
    CHECK(is_cubic(a.graph));
    CHECK(is_connected(a.graph));
    CHECK(a.edge_labels.size() == static_cast<std::size_t>(a.graph.edge_count()));
    CHECK(std::set<std::string>(a.edge_labels.begin(), a.edge_labels.end()).size() == a.edge_labels.size());
    CHECK(parse_atlas_name(to_string(n)) == n);
  }
}

TEST_CASE("atlas sizes") {
  CHECK(named(AtlasName::kSylvester16).vertex_count() == 16);
  CHECK(named(AtlasName::kSylvester16).edge_count() == 24);
  CHECK(named(AtlasName::kPetersen).vertex_count() == 10);
  CHECK(named(AtlasName::kPetersen).edge_count() == 15);
  CHECK(named(AtlasName::kSylvester10).edge_count() == 15);
  CHECK(named(AtlasName::kSylvester4).edge_count() == 6);
}

TEST_CASE("S4 labels") {
  const LabeledAtlasGraph s4 = atlas(AtlasName::kSylvester4);
  CHECK(s4.edge_labels == std::vector<std::string>{"a", "b", "c", "a'", "b'", "c'"});
  CHECK(s4.graph.edge(s4.edge_by_label("b'")).is_loop());
  CHECK_FALSE(s4.graph.edge(s4.edge_by_label("b")).is_loop());
}

TEST_CASE("S16 has no perfect matching") { CHECK_FALSE(find_1_factor(named(AtlasName::kSylvester16)).has_value()); }

TEST_CASE("S has three non-contractible triangles") {
  const PseudoGraph s = named(AtlasName::kSylvester10);
  const auto ts = triangles(s);
  CHECK(ts.size() == 3);
  for (const Triangle& t : ts) CHECK_FALSE(is_contractible(s, t));
}

TEST_CASE("S' is simple, bridged, not 3-edge-colourable and not Petersen") {
  const PseudoGraph sp = named(AtlasName::kSPrime);
  CHECK(sp.is_simple());
  CHECK(bridges(sp).size() == 1);
  CHECK(chromatic_index_cubic(sp).value == 4);
  CHECK_FALSE(is_isomorphic(sp, named(AtlasName::kPetersen)));
}

TEST_CASE("atlas name aliases") {
  CHECK(parse_atlas_name("P") == AtlasName::kPetersen);
  CHECK(parse_atlas_name("S") == AtlasName::kSylvester10);
  CHECK(parse_atlas_name("s16") == AtlasName::kSylvester16);
  CHECK(parse_atlas_name("S'") == AtlasName::kSPrime);
  CHECK_FALSE(parse_atlas_name("heawood").has_value());
}
