#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prc/compare.hpp"
#include "prc/ingest.hpp"
#include "prc/lexicon.hpp"
#include "prc/scoring.hpp"

namespace prc {

// Products whose SMOP values differ by no more than this share a verdict rank.
inline constexpr double kVerdictTieThreshold = 1e-9;

struct VerdictEntry {
  std::string product_id;
  int rank = 0;  // 1 = best; tied products share a rank

  friend bool operator==(const VerdictEntry&, const VerdictEntry&) = default;
};

struct GroupResult {
  AttributeGroup group;
  std::optional<int> maximum;
  std::vector<NormalizedProfile> profiles;  // one per product, report order
  std::vector<std::optional<double>> smop;  // nullopt when fewer than 3 axes
  std::vector<VerdictEntry> verdict;        // empty when SMOP is unavailable

  bool present() const { return !group.axes.empty(); }
  bool smop_eligible() const { return group.axes.size() >= 3; }
  const std::optional<double>& SmopOf(const std::string& product_id) const;

  friend bool operator==(const GroupResult&, const GroupResult&) = default;
};

struct ComparisonReport {
  std::vector<std::string> products;
  std::string lexicon_name;
  NormalizationConfig config;
  AxisOrdering ordering;
  std::vector<std::string> common_attributes;
  std::map<std::string, std::string> labels;  // canonical key -> display form
  std::vector<ScoreTable> score_tables;
  GroupResult positive;
  GroupResult negative;
  std::vector<std::string> warnings;

  const GroupResult& Group(Polarity polarity) const {
    return polarity == Polarity::kPositive ? positive : negative;
  }
  std::string Label(const std::string& key) const;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

struct ReportOptions {
  NormalizationConfig config;
  AxisOrdering ordering;
  bool strict = true;
};

// Score -> intersect -> partition -> order -> normalize -> SMOP -> verdict.
// Throws kInsufficientProducts, kDuplicateProduct, kEmptyIntersection, or
// whatever the underlying stages raise.
ComparisonReport BuildReport(const std::vector<EvaluationDataset>& datasets,
                             const Lexicon& lexicon, const ReportOptions& options = {});

// Higher SMOP ranks first for the positive group, lower SMOP for the negative.
std::vector<VerdictEntry> RankBySmop(const std::vector<std::string>& products,
                                     const std::vector<std::optional<double>>& smop,
                                     Polarity polarity);

// Half-up decimal formatting used for report display.
std::string FormatHalfUp(double value, int digits);

std::string RenderMarkdownReport(const ComparisonReport& report);
std::string RenderJsonReport(const ComparisonReport& report);
std::string RenderCsvReport(const ComparisonReport& report);
ComparisonReport ParseJsonReport(const std::string& document);

std::string RenderScoreTable(const ScoreTable& table, const Lexicon& lexicon,
                             const std::string& format);

struct ChartSeries {
  std::string product_id;
  std::vector<double> values;
  std::string stroke;
  std::string fill;
};

struct RadarChartSpec {
  std::string title;
  std::vector<std::string> axes;
  std::vector<ChartSeries> series;
  int grid_rings = 5;
  double width = 640;
  double height = 640;
};

RadarChartSpec MakeRadarChartSpec(const ComparisonReport& report, Polarity polarity);

// Throws kDegenerateProfile for fewer than 3 axes and kInvalidProfile when a
// series length does not match the axis count.
std::string RenderRadarSvg(const RadarChartSpec& spec);

}  // namespace prc
