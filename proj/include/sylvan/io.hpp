#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sylvan/graph.hpp"

namespace sylvan {

/// Largest order handled by the single-byte graph6/sparse6 size header.
inline constexpr int kMaxCodecVertices = 62;

PseudoGraph parse_graph6(std::string_view line);
/// Throws PreconditionError for graphs with loops or parallel edges.
std::string write_graph6(const PseudoGraph& g);

PseudoGraph parse_sparse6(std::string_view line);
/// Multigraphs only; loops are rejected.
std::string write_sparse6(const PseudoGraph& g);

/// pgf: "n; u v, u v, ..." with "u u" for a loop. Edge order is preserved.
PseudoGraph parse_pgf(std::string_view line);
std::string write_pgf(const PseudoGraph& g);

enum class GraphFormat { kGraph6, kSparse6, kPgf };

const char* to_string(GraphFormat f);
GraphFormat parse_format_name(std::string_view name);
/// Format implied by a file extension (.g6, .s6, .pgf); throws on unknown.
GraphFormat format_from_path(std::string_view path);

/// Auto-detects sparse6 (leading ':') versus graph6 when `format` is graph6.
PseudoGraph parse_graph(std::string_view line, GraphFormat format);
std::string write_graph(const PseudoGraph& g, GraphFormat format);

/// Every graph in a stream, one per non-empty line; '#' starts a comment line
/// and ">>graph6<<" / ">>sparse6<<" headers are skipped.
std::vector<PseudoGraph> read_graphs(std::istream& in, GraphFormat format);
std::vector<PseudoGraph> read_graph_file(const std::string& path, GraphFormat format);

}  // namespace sylvan
