#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "sylvan/campaign.hpp"
#include "sylvan/errors.hpp"

using namespace sylvan;
using fixtures::named;
using nlohmann::json;

namespace {

CampaignResult run(CampaignId id, int max_n, int jobs = 1) {
  CampaignParams p;
  p.id = id;
  p.max_n = max_n;
  p.jobs = jobs;
  p.timing = false;
  return run_campaign(p);
}

}  // namespace

TEST_CASE("names") {
  for (CampaignId id : all_campaigns()) CHECK(parse_campaign(to_string(id)) == id);
  CHECK_FALSE(parse_campaign("thm99").has_value());
  CHECK(all_campaigns().size() == 8);
}

TEST_CASE("graph codes") {
  std::string f;
  CHECK(graph_code(named(AtlasName::kK4), &f) == "C~");
  CHECK(f == "g6");
  graph_code(fixtures::theta(), &f);
  CHECK(f == "s6");
  graph_code(named(AtlasName::kSylvester4), &f);
  CHECK(f == "pgf");
}

TEST_CASE("small campaigns confirm") {
  const std::pair<CampaignId, int> runs[] = {{CampaignId::kProp5, 10}, {CampaignId::kProp7, 10},
                                             {CampaignId::kThm11, 8},  {CampaignId::kThm13, 8},
                                             {CampaignId::kThm9, 6},   {CampaignId::kThm15, 8},
                                             {CampaignId::kCor14, 0},  {CampaignId::kLemma4, 6}};
  for (auto [id, n] : runs) {
    CAPTURE(to_string(id));
    const CampaignResult r = run(id, n);
    CHECK(r.verdict == Verdict::kConfirmed);
    CHECK_FALSE(r.lines.empty());
    CHECK(json::parse(r.summary_json)["verdict"] == "confirmed");
  }
}

TEST_CASE("prop7 tags Petersen") {
  const json s = json::parse(run(CampaignId::kProp7, 10).summary_json);
  CHECK(s["petersen"].size() == 1);
  CHECK(s["class2"].size() == 2);
  CHECK(s["sprime"].size() == 1);
}

TEST_CASE("uniqueness campaigns include the extra graph") {
  const CampaignResult r = run(CampaignId::kThm13, 8);
  CHECK(r.lines.back().n == 10);
  CHECK(r.lines.back().outcome == "found");
}

TEST_CASE("worker count does not change the report") {
  const CampaignResult a = run(CampaignId::kThm15, 10, 1);
  const CampaignResult b = run(CampaignId::kThm15, 10, 3);
  REQUIRE(a.lines.size() == b.lines.size());
  for (std::size_t i = 0; i < a.lines.size(); ++i) CHECK(a.lines[i].to_json(false) == b.lines[i].to_json(false));
  CHECK(a.summary_json == b.summary_json);
}

TEST_CASE("budget exhaustion") {
  CampaignParams p;
  p.id = CampaignId::kCor14;
  p.budget = 2;
  CHECK(run_campaign(p).verdict == Verdict::kBudgetExhausted);
}

TEST_CASE("report lines") {
  ReportLine l;
  l.campaign = "prop5";
  l.graph = "C~";
  l.format = "graph6";
  l.n = 4;
  l.outcome = "ok";
  l.ms = 1.5;
  l.extra_json = R"({"bridges":0})";
  const json j = json::parse(l.to_json());
  CHECK(j["bridges"] == 0);
  CHECK(j["ms"] == 1.5);
  CHECK_FALSE(json::parse(l.to_json(false)).contains("ms"));
}

TEST_CASE("ordered pool") {
  std::vector<std::size_t> order;
  run_ordered<std::size_t>(
      50, 4, [](std::size_t i) { return i * i; },
      [&](std::size_t i, std::size_t& v) {
        CHECK(v == i * i);
        order.push_back(i);
      });
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(order[i] == i);
  CHECK(order.size() == 50);
  CHECK_THROWS(run_ordered<int>(
      5, 2, [](std::size_t i) -> int { if (i == 3) throw std::runtime_error("x"); return 0; },
      [](std::size_t, int&) {}));
}
