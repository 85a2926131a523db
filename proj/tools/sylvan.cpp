// Command-line workbench: atlas dumps, colouring checks and searches, and
// verification campaigns. Every command writes JSON lines.
//
// Exit codes: 0 success / found / confirmed, 1 valid run with a negative
// result, 2 input error, 3 node budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sylvan/approx.hpp"
#include "sylvan/atlas.hpp"
#include "sylvan/campaign.hpp"
#include "sylvan/enumerate.hpp"
#include "sylvan/errors.hpp"
#include "sylvan/hcoloring.hpp"
#include "sylvan/io.hpp"
#include "sylvan/s4.hpp"

namespace {

using namespace sylvan;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("SYLVAN_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("SYLVAN_JOBS is not a positive integer: ") + env);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
  void line(const std::string& s) { out() << s << '\n' << std::flush; }

 private:
  std::ofstream file_;
};

AtlasName atlas_or_throw(const std::string& name) {
  const auto n = parse_atlas_name(name);
  if (!n) throw InputError("unknown atlas graph '" + name + "'");
  return *n;
}

std::optional<GraphFormat> format_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_format_name(text);
}

std::vector<PseudoGraph> load(const std::string& in, const std::string& format, const std::string& target) {
  if (!target.empty()) return {atlas(atlas_or_throw(target)).graph};
  if (in.empty()) throw InputError("give --in FILE or --target NAME");
  const auto f = format_option(format);
  if (in == "-") return read_graphs(std::cin, f.value_or(GraphFormat::kGraph6));
  return read_graph_file(in, f ? *f : format_from_path(in));
}

GraphClass class_option(const std::string& text) {
  if (text == "simple") return GraphClass::kSimple;
  if (text == "multi" || text == "multigraph") return GraphClass::kMultigraph;
  if (text == "pseudo" || text == "pseudograph") return GraphClass::kPseudograph;
  throw InputError("unknown class '" + text + "' (simple|multi|pseudo)");
}

PseudoGraph graph_from_text(const std::string& text) {
  if (const auto n = parse_atlas_name(text)) return atlas(*n).graph;
  if (text.find(';') != std::string::npos) return parse_pgf(text);
  return parse_graph(text, GraphFormat::kGraph6);
}

int cmd_atlas(const std::string& name, const std::string& format, const std::string& out_path) {
  Output out(out_path);
  std::vector<AtlasName> names = name.empty() ? all_atlas_names() : std::vector<AtlasName>{atlas_or_throw(name)};
  for (AtlasName n : names) {
    const LabeledAtlasGraph a = atlas(n);
    std::string fmt;
    std::string code;
    if (format.empty()) {
      code = write_pgf(a.graph);
      fmt = "pgf";
    } else {
      const GraphFormat f = parse_format_name(format);
      code = write_graph(a.graph, f);
      fmt = to_string(f);
    }
    out.line(json{{"name", to_string(n)},
                  {"n", a.graph.vertex_count()},
                  {"m", a.graph.edge_count()},
                  {"format", fmt},
                  {"graph", code},
                  {"labels", a.edge_labels}}
                 .dump());
  }
  return kExitOk;
}

EdgeMapping mapping_from_json(const json& j) {
  auto target = std::make_shared<const PseudoGraph>(graph_from_text(j.at("target").get<std::string>()));
  auto host = std::make_shared<const PseudoGraph>(graph_from_text(j.at("host").get<std::string>()));
  EdgeMapping f = EdgeMapping::blank(target, host);
  for (const json& a : j.at("assignment")) {
    const auto e = a.at(0).get<EdgeId>();
    if (!target->valid_edge(e)) throw InputError("assignment names edge " + std::to_string(e) + " outside the target");
    f.images[static_cast<std::size_t>(e)][0] = a.at(1).get<EdgeId>();
    if (a.size() > 2) f.images[static_cast<std::size_t>(e)][1] = a.at(2).get<EdgeId>();
  }
  return f;
}

int cmd_check(const std::string& mapping_path, const std::string& out_path) {
  std::ifstream in(mapping_path);
  if (!in) throw InputError("cannot read " + mapping_path);
  Output out(out_path);
  bool all_valid = true;
  std::string text;
  int lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    if (text.empty() || text[0] == '#') continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    EdgeMapping f;
    try {
      f = mapping_from_json(j);
    } catch (const json::exception& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    const SatisfactionReport rep = satisfaction(f);
    all_valid = all_valid && rep.complete();
    json failures = json::array();
    for (const VertexFailure& fl : rep.failures) failures.push_back({{"vertex", fl.vertex}, {"seen", fl.seen}});
    out.line(json{{"valid", rep.complete()},
                  {"n", f.target->vertex_count()},
                  {"satisfied", rep.satisfied.size()},
                  {"failures", failures}}
                 .dump());
  }
  return all_valid ? kExitOk : kExitNegative;
}

struct FindArgs {
  std::string in, format, target, host, host_file, out;
  bool count = false;
  bool symmetry = false;
  std::uint64_t budget = 0;
  int jobs = 1;
};

int cmd_find(const FindArgs& a) {
  const std::vector<PseudoGraph> targets = load(a.in, a.format, a.target);
  PseudoGraph host;
  if (!a.host.empty()) {
    host = atlas(atlas_or_throw(a.host)).graph;
  } else if (!a.host_file.empty()) {
    const auto hs = read_graph_file(a.host_file, format_from_path(a.host_file));
    if (hs.size() != 1) throw InputError("host file must hold exactly one graph");
    host = hs.front();
  } else {
    throw InputError("give --host NAME or --host-file FILE");
  }
  SearchOptions o;
  o.mode = a.count ? SearchMode::kCount : SearchMode::kFirst;
  o.node_budget = a.budget;
  o.break_symmetry = a.symmetry;
  Output out(a.out);
  bool any_absent = false;
  bool any_budget = false;
  run_ordered<SearchResult>(
      targets.size(), a.jobs, [&](std::size_t i) { return search_h_colorings(targets[i], host, o); },
      [&](std::size_t i, SearchResult& r) {
        json j = r.mapping ? json::parse(mapping_to_json(*r.mapping)) : json{{"target", write_pgf(targets[i])}, {"host", write_pgf(host)}};
        j["status"] = to_string(r.status);
        j["nodes"] = r.nodes;
        if (a.count) j["solutions"] = r.solution_count;
        any_absent = any_absent || r.status == SearchStatus::kAbsent;
        any_budget = any_budget || r.status == SearchStatus::kBudgetExhausted;
        out.line(j.dump());
      });
  if (any_budget) return kExitBudget;
  return any_absent ? kExitNegative : kExitOk;
}

int cmd_s4(const std::string& in, const std::string& format, const std::string& target, const std::string& out_path) {
  Output out(out_path);
  bool ok = true;
  for (const PseudoGraph& g : load(in, format, target)) {
    const S4Coloring c = s4_color(g);
    ok = ok && validate_s4(g, c).complete();
    out.line(s4_to_json(g, c));
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_approx(const std::string& in, const std::string& format, const std::string& target,
               const std::string& out_path) {
  Output out(out_path);
  bool ok = true;
  for (const PseudoGraph& g : load(in, format, target)) {
    const ApproxResult r = approx_s_coloring(g);
    ok = ok && r.satisfied() >= r.bound();
    out.line(approx_to_json(r));
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_enumerate(int min_n, int max_n, const std::string& cls_text, const std::string& format,
                  const std::string& out_path) {
  const GraphClass cls = class_option(cls_text);
  Output out(out_path);
  for (int n = std::max(2, min_n + (min_n % 2)); n <= max_n; n += 2) {
    for (const PseudoGraph& g : enumerate_cubic(n, cls)) {
      if (format.empty()) {
        out.line(graph_code(g));
      } else {
        out.line(write_graph(g, parse_format_name(format)));
      }
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string campaign, in, format, cls, out;
  int max_n = 0;
  std::uint64_t budget = 0;
  int jobs = 1;
  int samples = 1000;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  CampaignParams p;
  const auto id = parse_campaign(a.campaign);
  if (!id) throw InputError("unknown campaign '" + a.campaign + "'");
  p.id = *id;
  p.max_n = a.max_n;
  if (!a.cls.empty()) p.graph_class = class_option(a.cls);
  if (!a.in.empty()) p.corpus_path = a.in;
  if (!a.format.empty()) p.corpus_format = parse_format_name(a.format);
  p.budget = a.budget;
  p.jobs = a.jobs;
  p.samples = a.samples;
  p.timing = !a.no_timing;
  Output out(a.out);
  const CampaignResult r = run_campaign(p, [&](const ReportLine& line) { out.line(line.to_json(p.timing)); });
  out.line(r.summary_json);
  switch (r.verdict) {
    case Verdict::kConfirmed:
      return kExitOk;
    case Verdict::kCounterexample:
      return kExitNegative;
    case Verdict::kBudgetExhausted:
      return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sylvan: H-colourings of cubic graphs"};
  app.require_subcommand(1);

  int jobs = 0;
  std::string out_path;

  std::string atlas_name, atlas_format;
  auto* atlas_cmd = app.add_subcommand("atlas", "print a named graph with its edge labels (all when no name)");
  atlas_cmd->add_option("name", atlas_name, "petersen, sylvester10, sylvester4, sylvester16, sprime, k4, k33, prism, dumbbell6");
  atlas_cmd->add_option("--format", atlas_format, "g6|s6|pgf (default pgf)");
  atlas_cmd->add_option("--out", out_path);

  std::string mapping_path;
  auto* check_cmd = app.add_subcommand("check", "check H-colourings given as JSON lines");
  check_cmd->add_option("--mapping,--in", mapping_path, "JSON lines with target, host and assignment")->required();
  check_cmd->add_option("--out", out_path);

  FindArgs fa;
  auto* find_cmd = app.add_subcommand("find", "search for an H-colouring of each input graph");
  find_cmd->add_option("--in", fa.in);
  find_cmd->add_option("--format", fa.format, "g6|s6|pgf");
  find_cmd->add_option("--target", fa.target, "atlas graph to colour");
  find_cmd->add_option("--host", fa.host, "atlas graph used as colour set");
  find_cmd->add_option("--host-file", fa.host_file, "file holding the host graph");
  find_cmd->add_flag("--count", fa.count, "count all colourings");
  find_cmd->add_flag("--symmetry", fa.symmetry, "fix the first edge up to host automorphisms");
  find_cmd->add_option("--budget", fa.budget, "node budget per search (0 = none)");
  find_cmd->add_option("--jobs", jobs);
  find_cmd->add_option("--out", fa.out);

  std::string in, format, target;
  auto* s4_cmd = app.add_subcommand("s4", "S4-colour each input graph");
  auto* approx_cmd = app.add_subcommand("approx", "4/5-satisfying S-colouring of each input graph");
  for (auto* c : {s4_cmd, approx_cmd}) {
    c->add_option("--in", in);
    c->add_option("--format", format, "g6|s6|pgf");
    c->add_option("--target", target, "atlas graph instead of --in");
    c->add_option("--out", out_path);
  }

  int min_n = 2;
  int max_n = 0;
  std::string cls = "simple";
  auto* enum_cmd = app.add_subcommand("enumerate", "list connected cubic graphs up to isomorphism");
  enum_cmd->add_option("--max-n", max_n)->required();
  enum_cmd->add_option("--min-n", min_n);
  enum_cmd->add_option("--class", cls, "simple|multi|pseudo");
  enum_cmd->add_option("--format", format, "g6|s6|pgf");
  enum_cmd->add_option("--out", out_path);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->add_option("campaign", va.campaign, "prop5|prop7|thm11|thm13|cor14|thm9|thm15|lemma4")->required();
  verify_cmd->add_option("--max-n", va.max_n);
  verify_cmd->add_option("--class", va.cls, "simple|multi|pseudo");
  verify_cmd->add_option("--in", va.in, "corpus file instead of enumeration");
  verify_cmd->add_option("--format", va.format, "g6|s6|pgf");
  verify_cmd->add_option("--budget", va.budget, "node budget per search (0 = none)");
  verify_cmd->add_option("--jobs", jobs);
  verify_cmd->add_option("--samples", va.samples, "lemma4: colourings to check");
  verify_cmd->add_flag("--no-timing", va.no_timing, "omit wall-clock fields");
  verify_cmd->add_option("--out", va.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "sylvan: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (jobs <= 0) jobs = default_jobs();
    fa.jobs = jobs;
    va.jobs = jobs;
    if (*atlas_cmd) return cmd_atlas(atlas_name, atlas_format, out_path);
    if (*check_cmd) return cmd_check(mapping_path, out_path);
    if (*find_cmd) return cmd_find(fa);
    if (*s4_cmd) return cmd_s4(in, format, target, out_path);
    if (*approx_cmd) return cmd_approx(in, format, target, out_path);
    if (*enum_cmd) return cmd_enumerate(min_n, max_n, cls, format, out_path);
    if (*verify_cmd) return cmd_verify(va);
  } catch (const InputError& e) {
    std::cerr << "sylvan: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "sylvan: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "sylvan: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "sylvan: internal error: " << e.what() << '\n';
    return 4;
  }
  return kExitOk;
}
