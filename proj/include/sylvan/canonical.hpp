#pragma once

#include <cstdint>
#include <vector>

#include "sylvan/graph.hpp"

namespace sylvan {

using CanonicalCode = std::vector<std::uint8_t>;

struct CanonicalForm {
  CanonicalCode code;
  /// perm[v] is the canonical position of vertex v.
  std::vector<VertexId> perm;
};

/// Canonical labelling by colour refinement plus individualisation, keeping
/// the lexicographically least multiplicity matrix. The code is
/// [n, m(0,0), m(0,1), ..., m(n-1,n-1)] over the upper triangle including the
/// diagonal (loop counts), so equal codes iff isomorphic as pseudographs.
CanonicalForm canonical_form(const PseudoGraph& g);
CanonicalCode canonical_code(const PseudoGraph& g);
/// `g` relabelled into canonical vertex order with sorted edges.
PseudoGraph canonical_graph(const PseudoGraph& g);
bool is_isomorphic(const PseudoGraph& a, const PseudoGraph& b);

/// Every vertex automorphism (as perm[v] = image of v), by backtracking with
/// refinement. Intended for the small hosts used by the searches.
std::vector<std::vector<VertexId>> automorphisms(const PseudoGraph& g);

/// Orbit index per edge under the automorphism group; parallel edges always
/// share an orbit.
std::vector<int> edge_orbits(const PseudoGraph& g);

}  // namespace sylvan
