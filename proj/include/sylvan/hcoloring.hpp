#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sylvan/graph.hpp"

namespace sylvan {

/// f : E(G) -> E(H). images[e][0] is the image of edge e; for a loop of G
/// images[e] holds its two colours (sorted), otherwise images[e][1] is
/// kNoEdge.
struct EdgeMapping {
  std::shared_ptr<const PseudoGraph> target;  // G
  std::shared_ptr<const PseudoGraph> host;    // H
  std::vector<std::array<EdgeId, 2>> images;

  /// Mapping with every edge unassigned (kNoEdge).
  static EdgeMapping blank(std::shared_ptr<const PseudoGraph> target,
                           std::shared_ptr<const PseudoGraph> host);
  /// Host edges seen at x, one entry per half-edge, sorted.
  std::vector<EdgeId> seen_at(VertexId x) const;
};

struct VertexFailure {
  VertexId vertex = -1;
  std::vector<EdgeId> seen;  // sorted host edge multiset
  /// Two G-edges at the vertex with the same image, when there are any
  /// (a loop with equal colours reports itself twice).
  std::optional<std::array<EdgeId, 2>> witness;
};

struct SatisfactionReport {
  std::vector<VertexId> satisfied;  // V(f), sorted
  std::vector<VertexFailure> failures;

  bool complete() const { return failures.empty(); }
};

/// Host-side lookups shared by the checker and the search.
struct CompatibilityTables {
  /// Distinct sorted boundaries {∂H(y)} (loops twice).
  std::vector<std::array<EdgeId, 3>> triples;
  /// adjacent[h] has bit k set iff host edges h and k share an endpoint.
  std::vector<std::uint64_t> adjacent;

  static CompatibilityTables build(const PseudoGraph& host);
  bool is_boundary(std::array<EdgeId, 3> sorted_triple) const;
};

/// Throws PreconditionError if an edge is unassigned or out of range, or the
/// graphs are missing.
SatisfactionReport satisfaction(const EdgeMapping& f);
bool is_h_coloring(const EdgeMapping& f);

/// Host edges with nonempty preimage, sorted.
std::vector<EdgeId> used_edges(const EdgeMapping& f);

enum class SearchMode { kFirst, kCount };
enum class SearchStatus { kFound, kAbsent, kBudgetExhausted };

const char* to_string(SearchStatus s);

struct SearchOptions {
  SearchMode mode = SearchMode::kFirst;
  /// Maximum number of branching decisions; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// In counting mode, also keep up to this many solutions.
  std::size_t keep_solutions = 0;
  /// In counting mode, stop after this many solutions (0 = all).
  std::uint64_t solution_cap = 0;
  /// Restrict the first branching variable to one host edge per
  /// automorphism orbit. Preserves existence, not counts.
  bool break_symmetry = false;
};

struct SearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<EdgeMapping> mapping;  // first solution, if any
  std::vector<EdgeMapping> solutions;  // counting mode, up to keep_solutions
  std::uint64_t solution_count = 0;
  std::uint64_t nodes = 0;
  bool capped = false;  // stopped at solution_cap
};

/// Complete backtracking search for H-colourings of G (G = `target`,
/// H = `host`) with generalized arc consistency on the vertex constraints.
/// Absent means the whole tree was explored. Host needs at most 64 edges.
/// Throws PreconditionError for non-cubic input.
SearchResult search_h_colorings(const PseudoGraph& target, const PseudoGraph& host,
                                const SearchOptions& options = {});

std::optional<EdgeMapping> find_h_coloring(const PseudoGraph& target, const PseudoGraph& host,
                                           const SearchOptions& options = {});

/// Results of the five consequences of f being an H-colouring of loop-free
/// cubic graphs.
struct PropertyReport {
  bool matchings = false;          // (a) preimage of every matching is a matching
  bool chromatic_index = false;    // (b) chi'(G) <= chi'(H)
  bool perfect_matchings = false;  // (c) preimage of a perfect matching is perfect
  bool even_subgraphs = false;     // (d) preimage of an even subgraph is even
  bool bridges = false;            // (e) bridges map to bridges
  std::vector<std::string> notes;  // one line per violated property

  bool all() const { return matchings && chromatic_index && perfect_matchings && even_subgraphs && bridges; }
};

/// Checks (a)-(e). (a) uses the equivalent local test that adjacent edges of
/// G have distinct adjacent images; (c) walks every perfect matching of H and
/// (d) every element of its cycle space. Throws PreconditionError unless f is
/// an H-colouring of loop-free graphs.
PropertyReport property_suite(const EdgeMapping& f);

/// Brute force version of (a): every matching of H (at most 24 edges).
bool matching_preimages_brute_force(const EdgeMapping& f);

std::string mapping_to_json(const EdgeMapping& f);

}  // namespace sylvan
