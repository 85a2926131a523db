#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sylvan/graph.hpp"
#include "sylvan/io.hpp"

namespace sylvan {

enum class CampaignId { kProp5, kProp7, kThm11, kThm13, kCor14, kThm9, kThm15, kLemma4 };

const char* to_string(CampaignId id);
std::optional<CampaignId> parse_campaign(const std::string& text);
std::vector<CampaignId> all_campaigns();

struct CampaignParams {
  CampaignId id = CampaignId::kProp5;
  /// 0 picks the campaign default (16, 10, 10, 10, -, 8, 14, 10).
  int max_n = 0;
  /// Graph class of the enumerated corpus; unset picks the campaign default.
  std::optional<GraphClass> graph_class;
  /// Read the corpus from this file instead of enumerating.
  std::optional<std::string> corpus_path;
  std::optional<GraphFormat> corpus_format;
  /// Node budget per search (0 = unlimited).
  std::uint64_t budget = 0;
  int jobs = 1;
  /// lemma4: how many colourings to check at least.
  int samples = 1000;
  /// Include wall-clock timings in report lines.
  bool timing = true;
};

enum class Verdict { kConfirmed, kCounterexample, kBudgetExhausted };

const char* to_string(Verdict v);

struct ReportLine {
  std::string campaign;
  std::string graph;   // graph6, sparse6 or pgf
  std::string format;  // which of the three
  int n = 0;
  std::string outcome;
  double ms = 0;
  std::optional<std::uint64_t> solutions;
  std::string extra_json = "{}";  // campaign-specific fields, merged in

  std::string to_json(bool with_timing = true) const;
};

struct CampaignResult {
  Verdict verdict = Verdict::kConfirmed;
  std::optional<PseudoGraph> counterexample;
  std::vector<ReportLine> lines;
  std::string summary_json;  // one object with the verdict and totals
};

/// Runs the campaign; `on_line`, when set, sees every report line in input
/// order as soon as its prefix is complete. Graphs are processed by a pool of
/// `jobs` workers. Throws PreconditionError for unsupported ranges.
CampaignResult run_campaign(const CampaignParams& params,
                            const std::function<void(const ReportLine&)>& on_line = {});

/// Smallest lossless text code: graph6 for simple graphs, sparse6 for
/// multigraphs, pgf otherwise.
std::string graph_code(const PseudoGraph& g, std::string* format = nullptr);

/// Calls work(i) for i in [0, count) on `jobs` threads and emit(i, result)
/// in increasing i. Exceptions from work are rethrown after all threads stop.
template <class Result>
void run_ordered(std::size_t count, int jobs, const std::function<Result(std::size_t)>& work,
                 const std::function<void(std::size_t, Result&)>& emit);

}  // namespace sylvan

#include "sylvan/detail/pool.hpp"
