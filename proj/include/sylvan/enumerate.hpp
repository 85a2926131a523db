#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sylvan/graph.hpp"

namespace sylvan {

/// Supported orders for `enumerate_cubic`.
inline constexpr int kMaxSimpleOrder = 16;
inline constexpr int kMaxMultigraphOrder = 14;
inline constexpr int kMaxPseudographOrder = 10;

struct EnumerateOptions {
  /// Non-zero: shuffle the processing order of parents and insertion sites.
  /// The output must not depend on it.
  std::uint64_t shuffle_seed = 0;
};

/// One canonical representative per isomorphism class of connected cubic
/// graphs of the given class on exactly n vertices, sorted by canonical
/// code. Graphs are grown from the two 2-vertex cubic pseudographs by
///  - edge insertion: subdivide two edges (possibly the same one) and join
///    the two new vertices;
///  - pendant loop: subdivide an edge and hang a new looped vertex on it.
/// Every connected cubic pseudograph with n >= 4 reduces by the inverse of
/// one of these (delete a non-bridge edge and suppress its ends, or remove a
/// looped leaf), so the growth is exhaustive. Each step removes at most two
/// loops or parallel edges, which bounds what intermediate levels must keep.
/// Throws PreconditionError for odd n or n outside the supported range.
std::vector<PseudoGraph> enumerate_cubic(int n, GraphClass cls, const EnumerateOptions& options = {});

/// All orders 2..max_n (even) of `enumerate_cubic`, concatenated by order.
std::vector<PseudoGraph> enumerate_cubic_up_to(int max_n, GraphClass cls,
                                               const EnumerateOptions& options = {});

/// Whether `g` belongs to the class (simple graphs are also multigraphs and
/// pseudographs).
bool in_class(const PseudoGraph& g, GraphClass cls);

}  // namespace sylvan
