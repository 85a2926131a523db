#include "sylvan/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "sylvan/approx.hpp"
#include "sylvan/atlas.hpp"
#include "sylvan/canonical.hpp"
#include "sylvan/enumerate.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/factors.hpp"
#include "sylvan/hcoloring.hpp"
#include "sylvan/s4.hpp"
#include "sylvan/structure.hpp"

namespace sylvan {

using nlohmann::json;

const char* to_string(CampaignId id) {
  switch (id) {
    case CampaignId::kProp5:
      return "prop5";
    case CampaignId::kProp7:
      return "prop7";
    case CampaignId::kThm11:
      return "thm11";
    case CampaignId::kThm13:
      return "thm13";
    case CampaignId::kCor14:
      return "cor14";
    case CampaignId::kThm9:
      return "thm9";
    case CampaignId::kThm15:
      return "thm15";
    case CampaignId::kLemma4:
      return "lemma4";
  }
  return "?";
}

std::vector<CampaignId> all_campaigns() {
  return {CampaignId::kProp5, CampaignId::kProp7, CampaignId::kThm11, CampaignId::kThm13,
          CampaignId::kCor14, CampaignId::kThm9,  CampaignId::kThm15, CampaignId::kLemma4};
}

std::optional<CampaignId> parse_campaign(const std::string& text) {
  for (CampaignId id : all_campaigns()) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed:
      return "confirmed";
    case Verdict::kCounterexample:
      return "counterexample";
    case Verdict::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

std::string ReportLine::to_json(bool with_timing) const {
  json j{{"campaign", campaign}, {"graph", graph}, {"format", format}, {"n", n}, {"outcome", outcome}};
  if (with_timing) j["ms"] = ms;
  if (solutions) j["solutions"] = *solutions;
  const json extra = json::parse(extra_json);
  for (auto& [k, v] : extra.items()) j[k] = v;
  return j.dump();
}

std::string graph_code(const PseudoGraph& g, std::string* format) {
  GraphFormat f = GraphFormat::kPgf;
  if (g.is_simple()) {
    f = GraphFormat::kGraph6;
  } else if (g.loop_count() == 0) {
    f = GraphFormat::kSparse6;
  }
  if (format) *format = to_string(f);
  return write_graph(g, f);
}

namespace {

enum class Flag { kOk, kCounterexample, kExhausted };

struct Item {
  ReportLine line;
  Flag flag = Flag::kOk;
  PseudoGraph graph;
  std::uint64_t colourings = 0;
  std::vector<std::string> tags;  // campaign-specific markers for the summary
};

int default_max_n(CampaignId id) {
  switch (id) {
    case CampaignId::kProp5:
      return 16;
    case CampaignId::kThm9:
      return 8;
    case CampaignId::kThm15:
      return 14;
    default:
      return 10;
  }
}

GraphClass default_class(CampaignId id) {
  switch (id) {
    case CampaignId::kThm9:
      return GraphClass::kPseudograph;
    case CampaignId::kThm15:
    case CampaignId::kLemma4:
      return GraphClass::kMultigraph;
    default:
      return GraphClass::kSimple;
  }
}

PseudoGraph named(AtlasName n) { return atlas(n).graph; }

std::vector<PseudoGraph> corpus(const CampaignParams& p) {
  if (p.id == CampaignId::kCor14) return {named(AtlasName::kPetersen)};
  std::vector<PseudoGraph> graphs;
  if (p.corpus_path) {
    const GraphFormat f = p.corpus_format ? *p.corpus_format : format_from_path(*p.corpus_path);
    graphs = read_graph_file(*p.corpus_path, f);
  } else {
    const int max_n = p.max_n > 0 ? p.max_n : default_max_n(p.id);
    const GraphClass cls = p.graph_class.value_or(default_class(p.id));
    graphs = enumerate_cubic_up_to(max_n, cls);
    auto include = [&](AtlasName n) {
      const PseudoGraph g = named(n);
      if (g.vertex_count() > max_n) graphs.push_back(canonical_graph(g));
    };
    if (p.id == CampaignId::kThm11) include(AtlasName::kSylvester16);
    if (p.id == CampaignId::kThm13) include(AtlasName::kPetersen);
  }
  return graphs;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

class Runner {
 public:
  explicit Runner(const CampaignParams& p)
      : p_(p),
        petersen_(named(AtlasName::kPetersen)),
        sylvester_(named(AtlasName::kSylvester10)),
        s16_(named(AtlasName::kSylvester16)),
        sprime_(named(AtlasName::kSPrime)) {}

  Item run(const PseudoGraph& g) {
    Item it;
    it.graph = g;
    it.line.campaign = to_string(p_.id);
    it.line.graph = graph_code(g, &it.line.format);
    it.line.n = g.vertex_count();
    const auto t0 = std::chrono::steady_clock::now();
    json extra = json::object();
    switch (p_.id) {
      case CampaignId::kProp5:
        prop5(g, it, extra);
        break;
      case CampaignId::kProp7:
        prop7(g, it, extra);
        break;
      case CampaignId::kThm11:
        colour_by(s16_, g, it, extra);
        break;
      case CampaignId::kThm13:
        colour_by(petersen_, g, it, extra);
        break;
      case CampaignId::kCor14:
        cor14(it, extra);
        break;
      case CampaignId::kThm9:
        thm9(g, it, extra);
        break;
      case CampaignId::kThm15:
        thm15(g, it, extra);
        break;
      case CampaignId::kLemma4:
        lemma4(g, it, extra);
        break;
    }
    it.line.ms = elapsed_ms(t0);
    it.line.extra_json = extra.dump();
    return it;
  }

  std::size_t per_pair_cap = 8;

 private:
  SearchResult search(const PseudoGraph& target, const PseudoGraph& host, SearchOptions o = {}) {
    o.node_budget = p_.budget;
    return search_h_colorings(target, host, o);
  }

  void prop5(const PseudoGraph& g, Item& it, json& extra) {
    const bool pm = find_1_factor(g).has_value();
    const auto br = bridges(g).size();
    extra["bridges"] = br;
    it.line.outcome = pm ? "perfect-matching" : "no-perfect-matching";
    if (!pm) {
      it.tags.push_back("no-pm");
      const bool is_s16 = is_isomorphic(g, s16_);
      extra["sylvester16"] = is_s16;
      if (!is_s16 || br <= 2) it.flag = Flag::kCounterexample;
    }
  }

  void prop7(const PseudoGraph& g, Item& it, json& extra) {
    const bool class1 = chromatic_index_cubic(g).value == 3;
    it.line.outcome = class1 ? "3-edge-colourable" : "not-3-edge-colourable";
    if (class1) return;
    it.tags.push_back("class2");
    const bool bridgeless = bridges(g).empty();
    extra["bridgeless"] = bridgeless;
    if (is_isomorphic(g, petersen_)) {
      extra["matches"] = "petersen";
      it.tags.push_back("petersen");
    } else if (is_isomorphic(g, sprime_)) {
      extra["matches"] = "sprime";
      it.tags.push_back("sprime");
    } else {
      it.flag = Flag::kCounterexample;
    }
  }

  // Searches for an H-colouring of `target` with host g: only g = target
  // may succeed.
  void colour_by(const PseudoGraph& target, const PseudoGraph& g, Item& it, json& extra) {
    const SearchResult r = search(target, g);
    it.line.outcome = to_string(r.status);
    extra["nodes"] = r.nodes;
    const bool same = is_isomorphic(g, target);
    if (r.status == SearchStatus::kBudgetExhausted) {
      it.flag = Flag::kExhausted;
    } else if ((r.status == SearchStatus::kFound) != same) {
      it.flag = Flag::kCounterexample;
    }
    if (r.status == SearchStatus::kFound) it.tags.push_back("found");
  }

  void cor14(Item& it, json& extra) {
    const SearchResult r = search(petersen_, s16_);
    it.line.outcome = to_string(r.status);
    extra["host"] = "sylvester16";
    extra["nodes"] = r.nodes;
    if (r.status == SearchStatus::kFound) it.flag = Flag::kCounterexample;
    if (r.status == SearchStatus::kBudgetExhausted) it.flag = Flag::kExhausted;
  }

  void thm9(const PseudoGraph& g, Item& it, json& extra) {
    try {
      S4Stats stats;
      const S4Coloring c = s4_color(g, &stats);
      const bool ok = validate_s4(g, c).complete() && is_h_coloring(s4_mapping(g, c));
      it.line.outcome = ok ? "valid" : "invalid";
      extra["case1"] = stats.case1;
      extra["case2"] = stats.case21 + stats.case22;
      if (!ok) it.flag = Flag::kCounterexample;
    } catch (const std::exception& e) {
      it.line.outcome = "invalid";
      extra["error"] = e.what();
      it.flag = Flag::kCounterexample;
    }
  }

  void thm15(const PseudoGraph& g, Item& it, json& extra) {
    const ApproxResult r = approx_s_coloring(g);
    extra["satisfied"] = r.satisfied();
    extra["bound"] = r.bound();
    extra["uncolored"] = r.stats.uncolored;
    bool witnesses = true;
    try {
      failure_witnesses(r);
    } catch (const std::logic_error&) {
      witnesses = false;
    }
    if (r.satisfied() < r.bound()) {
      it.line.outcome = "below-bound";
      it.flag = Flag::kCounterexample;
    } else if (!witnesses) {
      it.line.outcome = "missing-witness";
      it.flag = Flag::kCounterexample;
    } else {
      it.line.outcome = "ok";
    }
  }

  void lemma4(const PseudoGraph& g, Item& it, json& extra) {
    if (g.loop_count() != 0) {
      it.line.outcome = "skipped";
      return;
    }
    const std::pair<const char*, const PseudoGraph*> hosts[] = {
        {"petersen", &petersen_}, {"sylvester10", &sylvester_}, {"sylvester16", &s16_}};
    bool exhausted = false;
    std::vector<std::string> notes;
    for (const auto& [name, host] : hosts) {
      SearchOptions o;
      o.mode = SearchMode::kCount;
      o.solution_cap = per_pair_cap;
      o.keep_solutions = per_pair_cap;
      const SearchResult r = search(g, *host, o);
      if (r.status == SearchStatus::kBudgetExhausted) exhausted = true;
      extra[name] = r.solutions.size();
      for (const EdgeMapping& f : r.solutions) {
        ++it.colourings;
        const PropertyReport rep = property_suite(f);
        if (!rep.all()) notes.insert(notes.end(), rep.notes.begin(), rep.notes.end());
      }
    }
    it.line.solutions = it.colourings;
    if (!notes.empty()) {
      it.line.outcome = "violation";
      extra["notes"] = notes;
      it.flag = Flag::kCounterexample;
    } else {
      it.line.outcome = exhausted ? "budget-exhausted" : "ok";
      if (exhausted) it.flag = Flag::kExhausted;
    }
  }

  const CampaignParams& p_;
  PseudoGraph petersen_;
  PseudoGraph sylvester_;
  PseudoGraph s16_;
  PseudoGraph sprime_;
};

}  // namespace

CampaignResult run_campaign(const CampaignParams& params, const std::function<void(const ReportLine&)>& on_line) {
  const std::vector<PseudoGraph> graphs = corpus(params);
  Runner runner(params);
  if (params.id == CampaignId::kLemma4) {
    // Enough colourings per (graph, host) pair to reach the sample target.
    const std::size_t pairs = std::max<std::size_t>(1, 3 * graphs.size());
    runner.per_pair_cap = std::max<std::size_t>(4, 2 * static_cast<std::size_t>(params.samples) / pairs + 1);
  }

  CampaignResult result;
  std::vector<Item> items;
  items.reserve(graphs.size());
  run_ordered<Item>(
      graphs.size(), params.jobs, [&](std::size_t i) { return runner.run(graphs[i]); },
      [&](std::size_t, Item& it) {
        if (on_line) on_line(it.line);
        items.push_back(std::move(it));
      });

  json summary{{"campaign", to_string(params.id)}, {"graphs", items.size()}};
  bool exhausted = false;
  std::uint64_t colourings = 0;
  json tagged = json::object();
  for (Item& it : items) {
    colourings += it.colourings;
    for (const std::string& t : it.tags) tagged[t].push_back(it.line.graph);
    if (it.flag == Flag::kCounterexample && !result.counterexample) {
      result.verdict = Verdict::kCounterexample;
      result.counterexample = it.graph;
    }
    if (it.flag == Flag::kExhausted) exhausted = true;
    result.lines.push_back(it.line);
  }
  // A self-colouring must exist for the uniqueness campaigns.
  if ((params.id == CampaignId::kThm11 || params.id == CampaignId::kThm13) && !tagged.contains("found") &&
      !result.counterexample && !exhausted) {
    result.verdict = Verdict::kCounterexample;
    result.counterexample = params.id == CampaignId::kThm11 ? named(AtlasName::kSylvester16) : named(AtlasName::kPetersen);
  }
  if (params.id == CampaignId::kLemma4) {
    summary["colourings"] = colourings;
    summary["samples"] = params.samples;
    summary["enough"] = colourings >= static_cast<std::uint64_t>(params.samples);
  }
  if (result.verdict == Verdict::kConfirmed && exhausted) result.verdict = Verdict::kBudgetExhausted;
  for (auto& [k, v] : tagged.items()) summary[k] = v;
  summary["verdict"] = to_string(result.verdict);
  if (result.counterexample) {
    std::string fmt;
    summary["counterexample"] = graph_code(*result.counterexample, &fmt);
    summary["counterexample_format"] = fmt;
  }
  result.summary_json = summary.dump();
  return result;
}

}  // namespace sylvan
