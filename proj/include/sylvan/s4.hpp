#pragma once

#include <string>
#include <vector>

#include "sylvan/graph.hpp"
#include "sylvan/hcoloring.hpp"

namespace sylvan {

/// Edge labels of the 4-vertex Sylvester pseudograph; the numeric values are
/// its edge ids in the atlas (a, b, c are the bridges, primes the loops).
enum class S4Color { kA = 0, kB = 1, kC = 2, kAPrime = 3, kBPrime = 4, kCPrime = 5 };

const char* to_string(S4Color c);
S4Color parse_s4_color(const std::string& text);
inline bool is_primed(S4Color c) { return static_cast<int>(c) >= 3; }

/// One colour per ordinary edge, two per loop.
struct S4Coloring {
  std::vector<std::vector<S4Color>> colours;
};

struct S4Stats {
  int loop_eliminations = 0;  // loops replaced by pendant triangles
  int one_factor_steps = 0;
  int case1 = 0;
  int case21 = 0;
  int case22 = 0;
};

/// S4-colouring of a connected cubic pseudograph by induction on bridges:
/// loops are first replaced by pendant triangles, graphs with at most two
/// bridges are coloured from a 1-factor, three end-blocks at one vertex get
/// one colour pair each, and otherwise two end-blocks with non-adjacent
/// bridges are cut off, the rest coloured recursively and the blocks glued
/// back. The result is validated before it is returned.
/// Throws PreconditionError (DisconnectedGraphError) for bad input.
S4Coloring s4_color(const PseudoGraph& g, S4Stats* stats = nullptr);

/// Per-vertex check that the colours seen (loops twice) are {a, b, c} or
/// {d, d', d'}.
SatisfactionReport validate_s4(const PseudoGraph& g, const S4Coloring& col);

/// The same colouring as an edge mapping onto atlas(Sylvester4).
EdgeMapping s4_mapping(const PseudoGraph& g, const S4Coloring& col);

/// {"n": .., "edges": {"0": "a", "3": ["a'", "a'"], ...}}
std::string s4_to_json(const PseudoGraph& g, const S4Coloring& col);

}  // namespace sylvan
