#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylvan/graph.hpp"

namespace sylvan {

enum class AtlasName {
  kPetersen,
  kSylvester10,
  kSylvester4,
  kSylvester16,
  kSPrime,
  kK4,
  kK33,
  kPrism,
  kDumbbell6,
};

/// A named graph with one human-readable label per edge id. Labels live
/// beside the graph so PseudoGraph stays label-agnostic.
struct LabeledAtlasGraph {
  AtlasName name;
  PseudoGraph graph;
  std::vector<std::string> edge_labels;

  EdgeId edge_by_label(std::string_view label) const;
};

/// Builds the named graph. Vertex and edge numbering:
///  - Petersen: v1..v5 -> 0..4, u1..u5 -> 5..9; edges are the outer cycle
///    (v_i, v_i+1), spokes (u_i, v_i), inner pentagram (u_i, u_i+2).
///  - Sylvester4: centre 0, leaves 1..3; edges a, b, c then loops a', b', c'.
///  - Sylvester10: centre 0; bridges a, b, c are edges 0..2 and block d has
///    x = 1+3d, y = 2+3d, z = 3+3d with edges xy, xy', xz, yz at 3+4d..6+4d.
///  - Sylvester16: centre 0; block d has v1..v5 = 1+5d..5+5d, seven block
///    edges followed by the bridge (v, v5).
///  - SPrime: two Sylvester16 blocks joined by the bridge (v5, v5').
///  - Dumbbell6: two Sylvester10 blocks joined by the bridge (z, z').
LabeledAtlasGraph atlas(AtlasName name);

const char* to_string(AtlasName name);
/// Case-insensitive; accepts aliases such as "p", "s", "s4", "s16", "s'".
std::optional<AtlasName> parse_atlas_name(std::string_view text);
std::vector<AtlasName> all_atlas_names();

}  // namespace sylvan
