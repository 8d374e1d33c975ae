#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "golden.hpp"
#include "prc/error.hpp"
#include "prc/report.hpp"
#include "prc/smop.hpp"

namespace prc {
namespace {

const ComparisonReport& BundledReport() {
  static const ComparisonReport report =
      BuildReport({BundledDataset(BundledStudy::kCap), BundledDataset(BundledStudy::kEap)}, DefaultLexicon());
  return report;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected prc::Error");
  return ErrorCode::kIoError;
}

EvaluationDataset OneParticipant(const std::string& product, const std::vector<std::string>& words) {
  EvaluationDataset dataset{product, {{"p1", {}}}, "default", {}};
  int rank = 5;
  for (const auto& word : words) dataset.selections[0].picks.push_back({Canonicalize(word), rank--});
  return dataset;
}

TEST_CASE("bundled study pipeline") {
  const auto& report = BundledReport();
  CHECK(report.products == std::vector<std::string>{"CAP", "EAP"});
  CHECK(report.common_attributes.size() == 19);
  CHECK(report.positive.group.axes == golden::kPositiveAxes);
  CHECK(report.negative.group.axes == golden::kNegativeAxes);
  CHECK(report.positive.maximum == 37);
  CHECK(report.negative.maximum == 25);
  CHECK(*report.positive.SmopOf("CAP") == doctest::Approx(golden::kSmopCapPositive).epsilon(1e-12));
  CHECK(*report.positive.SmopOf("EAP") == doctest::Approx(golden::kSmopEapPositive).epsilon(1e-12));
  CHECK(*report.negative.SmopOf("CAP") == doctest::Approx(golden::kSmopCapNegative).epsilon(1e-12));
  CHECK(*report.negative.SmopOf("EAP") == doctest::Approx(golden::kSmopEapNegative).epsilon(1e-12));

  const std::vector<VerdictEntry> eap_first = {{"EAP", 1}, {"CAP", 2}};
  CHECK(report.positive.verdict == eap_first);
  CHECK(report.negative.verdict == eap_first);
  CHECK(report.warnings.empty());
}

TEST_CASE("self comparison ties") {
  auto copy = BundledDataset(BundledStudy::kCap);
  copy.product_id = "CAP-copy";
  const auto report = BuildReport({BundledDataset(BundledStudy::kCap), copy}, DefaultLexicon());
  CHECK(report.positive.profiles[0].values == report.positive.profiles[1].values);
  CHECK(report.positive.smop[0] == report.positive.smop[1]);
  CHECK(report.positive.verdict[0].rank == 1);
  CHECK(report.positive.verdict[1].rank == 1);
  CHECK(report.negative.verdict[1].rank == 1);
}

TEST_CASE("build_report errors") {
  CHECK(CodeOf([] { BuildReport({BundledDataset(BundledStudy::kCap)}, DefaultLexicon()); }) ==
        ErrorCode::kInsufficientProducts);
  CHECK(CodeOf([] {
          BuildReport({BundledDataset(BundledStudy::kCap), BundledDataset(BundledStudy::kCap)}, DefaultLexicon());
        }) == ErrorCode::kDuplicateProduct);
  CHECK(CodeOf([] {
          BuildReport({OneParticipant("A", {"Useful"}), OneParticipant("B", {"Vague"})}, DefaultLexicon());
        }) == ErrorCode::kEmptyIntersection);
}

TEST_CASE("verdict direction") {
  const std::vector<std::string> products = {"A", "B", "C"};
  const std::vector<std::optional<double>> smop = {0.2, 0.5, 0.2 + 1e-12};
  const auto positive = RankBySmop(products, smop, Polarity::kPositive);
  CHECK(positive == std::vector<VerdictEntry>{{"B", 1}, {"A", 2}, {"C", 2}});
  const auto negative = RankBySmop(products, smop, Polarity::kNegative);
  CHECK(negative == std::vector<VerdictEntry>{{"A", 1}, {"C", 1}, {"B", 3}});
  CHECK(RankBySmop(products, {0.1, std::nullopt, 0.3}, Polarity::kPositive).empty());
}

TEST_CASE("small and absent groups") {
  // Two common positives, no common negatives.
  const auto report = BuildReport(
      {OneParticipant("A", {"Useful", "Clear", "Vague"}), OneParticipant("B", {"Clear", "Useful", "Awkward"})},
      DefaultLexicon());
  CHECK(report.positive.present());
  CHECK_FALSE(report.positive.smop_eligible());
  CHECK_FALSE(report.positive.smop[0].has_value());
  CHECK(report.positive.verdict.empty());
  CHECK_FALSE(report.negative.present());

  const auto md = RenderMarkdownReport(report);
  CHECK(md.find("No common negative attributes.") != std::string::npos);
  CHECK(md.find("SMOP not computed") != std::string::npos);

  const auto json = nlohmann::json::parse(RenderJsonReport(report));
  CHECK(json["smop"]["positive"]["A"].is_null());
  CHECK(json["groups"]["negative"]["maximum"].is_null());
  CHECK(ParseJsonReport(RenderJsonReport(report)) == report);
}

TEST_CASE("markdown report") {
  const auto md = RenderMarkdownReport(BundledReport());
  CHECK(md == RenderMarkdownReport(BundledReport()));
  CHECK(md.find("| CAP | 0.619 |") != std::string::npos);
  CHECK(md.find("| EAP | 0.506 |") != std::string::npos);
  CHECK(md.find("| CAP | 0.039 |") != std::string::npos);
  CHECK(md.find("| EAP | 0.081 |") != std::string::npos);
  CHECK(md.find("| Easy to use | 0.18 | 0.70 |") != std::string::npos);
  CHECK(md.find("| Unrefined | 1 |") != std::string::npos);
  CHECK(md.find("EAP (0.506) > CAP (0.039)") != std::string::npos);
  for (const char* section : {"## Total scores", "## Common attributes", "## Common attributes by polarity",
                              "## Normalized scores", "## SMOP summary", "## Verdict"}) {
    CHECK_MESSAGE(md.find(section) != std::string::npos, section);
  }
}

TEST_CASE("display rounding is half-up") {
  CHECK(FormatHalfUp(0.61861879556232545, 3) == "0.619");
  CHECK(FormatHalfUp(0.0389, 3) == "0.039");
  CHECK(FormatHalfUp(0.1245, 3) == "0.125");
  CHECK(FormatHalfUp(0.125, 2) == "0.13");
  CHECK(FormatHalfUp(1.0, 2) == "1.00");
}

TEST_CASE("json report") {
  const auto& report = BundledReport();
  const auto text = RenderJsonReport(report);
  CHECK(text == RenderJsonReport(report));
  const auto json = nlohmann::json::parse(text);
  CHECK(json["smop"]["positive"]["EAP"].get<double>() == doctest::Approx(0.5064).epsilon(1e-4));
  CHECK(json["verdict"]["negative"][0]["product"] == "EAP");
  CHECK(json["config"]["mode"] == "truncate2");
  CHECK(ParseJsonReport(text) == report);
}

TEST_CASE("property: report numbers reproduce from its own tables and config") {
  for (const auto& config :
       {NormalizationConfig::Truncate(2), NormalizationConfig::Round(2), NormalizationConfig::Exact()}) {
    const auto report = BuildReport({BundledDataset(BundledStudy::kCap), BundledDataset(BundledStudy::kEap)},
                                    DefaultLexicon(), {config, {}, true});
    const auto parsed = ParseJsonReport(RenderJsonReport(report));
    for (const auto* group : {&parsed.positive, &parsed.negative}) {
      const auto profiles = Normalize(parsed.score_tables, group->group, parsed.config);
      for (std::size_t p = 0; p < profiles.size(); ++p) {
        CHECK(profiles[p].values == group->profiles[p].values);
        CHECK(SmopArea(profiles[p].values) == *group->smop[p]);
      }
    }
  }
}

TEST_CASE("exact mode ranks the same way") {
  const auto report = BuildReport({BundledDataset(BundledStudy::kCap), BundledDataset(BundledStudy::kEap)},
                                  DefaultLexicon(), {NormalizationConfig::Exact(), {}, true});
  CHECK(report.positive.verdict.front().product_id == "EAP");
  CHECK(report.negative.verdict.front().product_id == "EAP");
  CHECK(*std::max_element(report.positive.profiles[1].values.begin(), report.positive.profiles[1].values.end()) ==
        1.0);
}

TEST_CASE("csv report") {
  const auto csv = RenderCsvReport(BundledReport());
  CHECK(csv.rfind("record,polarity,attribute,product,value\n", 0) == 0);
  CHECK(csv.find("total,positive,useful,EAP,37\n") != std::string::npos);
  CHECK(csv.find("normalized,negative,vague,EAP,0.04\n") != std::string::npos);
  CHECK(csv.find("rank,negative,,EAP,1\n") != std::string::npos);
}

TEST_CASE("score table rendering") {
  const auto table = AggregateScores(BundledDataset(BundledStudy::kEap));
  const auto csv = RenderScoreTable(table, DefaultLexicon(), "csv");
  CHECK(csv.rfind("word,total\nUseful,37\nUsable,33\nEasy to use,26\n", 0) == 0);
  CHECK(csv.find("Business-like,4\n") != std::string::npos);
  const auto json = nlohmann::json::parse(RenderScoreTable(table, DefaultLexicon(), "json"));
  CHECK(json["grand_total"] == 240);
  CHECK(RenderScoreTable(table, DefaultLexicon(), "md").find("| Useful | 37 |") != std::string::npos);
}

std::size_t CountByClass(const boost::property_tree::ptree& node, const std::string& cls) {
  std::size_t count = 0;
  for (const auto& [name, child] : node) {
    if (name == "<xmlattr>") continue;
    if (child.get<std::string>("<xmlattr>.class", "") == cls) ++count;
    count += CountByClass(child, cls);
  }
  return count;
}

TEST_CASE("radar svg structure") {
  const auto spec = MakeRadarChartSpec(BundledReport(), Polarity::kPositive);
  const auto svg = RenderRadarSvg(spec);
  CHECK(svg == RenderRadarSvg(spec));
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  REQUIRE_NOTHROW(boost::property_tree::read_xml(in, tree));
  CHECK(CountByClass(tree, "axis") == 10);
  CHECK(CountByClass(tree, "axis-label") == 10);
  CHECK(CountByClass(tree, "series-polygon") == 2);
  CHECK(CountByClass(tree, "ring") == 5);
  CHECK(CountByClass(tree, "legend-label") == 2);
  CHECK(svg.find(">Easy to use<") != std::string::npos);
  CHECK(svg.find("data-series=\"CAP\"") != std::string::npos);
}

TEST_CASE("single series unit square lands on the axis tips") {
  RadarChartSpec spec;
  spec.title = "square";
  spec.axes = {"N", "E", "S", "W"};
  spec.series = {{"one", {1, 1, 1, 1}, "#000000", "#000000"}};
  spec.grid_rings = 0;
  const auto svg = RenderRadarSvg(spec);
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);

  std::vector<std::string> tips;
  for (const auto& [name, line] : tree.get_child("svg")) {
    if (name != "g" || line.get<std::string>("<xmlattr>.class", "") != "axes") continue;
    for (const auto& [n2, axis] : line) {
      if (n2 == "line") tips.push_back(axis.get<std::string>("<xmlattr>.x2") + "," + axis.get<std::string>("<xmlattr>.y2"));
    }
  }
  REQUIRE(tips.size() == 4);
  std::string expected;
  for (std::size_t i = 0; i < tips.size(); ++i) expected += (i ? " " : "") + tips[i];
  CHECK(svg.find("points=\"" + expected + "\"") != std::string::npos);
}

TEST_CASE("svg errors") {
  RadarChartSpec spec;
  spec.axes = {"a", "b"};
  CHECK(CodeOf([&] { RenderRadarSvg(spec); }) == ErrorCode::kDegenerateProfile);
  spec.axes = {"a", "b", "c"};
  spec.series = {{"x", {1, 1}, "#000", "#000"}};
  CHECK(CodeOf([&] { RenderRadarSvg(spec); }) == ErrorCode::kInvalidProfile);
  spec.series = {{"<&>", {1, 1, 1}, "#000", "#000"}};
  std::istringstream in(RenderRadarSvg(spec));
  boost::property_tree::ptree tree;
  CHECK_NOTHROW(boost::property_tree::read_xml(in, tree));
}

}  // namespace
}  // namespace prc
