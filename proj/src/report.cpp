#include "prc/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>

#include "prc/error.hpp"
#include "prc/smop.hpp"

namespace prc {

using nlohmann::json;

const std::optional<double>& GroupResult::SmopOf(const std::string& product_id) const {
  static const std::optional<double> kNone;
  for (std::size_t i = 0; i < profiles.size() && i < smop.size(); ++i) {
    if (profiles[i].product_id == product_id) return smop[i];
  }
  return kNone;
}

std::string ComparisonReport::Label(const std::string& key) const {
  const auto it = labels.find(key);
  return it == labels.end() ? key : it->second;
}

std::vector<VerdictEntry> RankBySmop(const std::vector<std::string>& products,
                                     const std::vector<std::optional<double>>& smop, Polarity polarity) {
  if (products.size() != smop.size()) return {};
  if (std::any_of(smop.begin(), smop.end(), [](const auto& v) { return !v.has_value(); })) return {};
  std::vector<std::size_t> order(products.size());
  std::iota(order.begin(), order.end(), 0);
  const bool higher_is_better = polarity == Polarity::kPositive;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(*smop[a] - *smop[b]) <= kVerdictTieThreshold) return false;
    return higher_is_better ? *smop[a] > *smop[b] : *smop[a] < *smop[b];
  });
  std::vector<VerdictEntry> verdict;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    int rank = static_cast<int>(pos) + 1;
    if (pos > 0 && std::abs(*smop[order[pos]] - *smop[order[pos - 1]]) <= kVerdictTieThreshold)
      rank = verdict.back().rank;
    verdict.push_back({products[order[pos]], rank});
  }
  return verdict;
}

namespace {

GroupResult EvaluateGroup(const std::vector<ScoreTable>& tables, const std::vector<std::string>& products,
                          AttributeGroup group, const NormalizationConfig& config) {
  GroupResult result;
  result.maximum = GroupMaximum(tables, group);
  result.profiles = Normalize(tables, group, config);
  const bool eligible = group.axes.size() >= 3;
  for (const auto& profile : result.profiles) {
    result.smop.push_back(eligible ? std::optional<double>(SmopArea(profile.values)) : std::nullopt);
  }
  result.verdict = RankBySmop(products, result.smop, group.polarity);
  result.group = std::move(group);
  return result;
}

}  // namespace

ComparisonReport BuildReport(const std::vector<EvaluationDataset>& datasets, const Lexicon& lexicon,
                             const ReportOptions& options) {
  if (datasets.size() < 2)
    throw Error(ErrorCode::kInsufficientProducts, "need at least 2 datasets, got " + std::to_string(datasets.size()));
  ComparisonReport report;
  std::set<std::string> ids;
  for (const auto& dataset : datasets) {
    if (!ids.insert(dataset.product_id).second) throw Error(ErrorCode::kDuplicateProduct, dataset.product_id);
    report.products.push_back(dataset.product_id);
    report.score_tables.push_back(AggregateScores(dataset));
    for (const auto& word : dataset.unknown_words) {
      report.warnings.push_back(dataset.product_id + ": '" + word + "' is not in lexicon '" + lexicon.name() +
                                "'; excluded from polarity groups");
    }
  }
  report.lexicon_name = lexicon.name();
  report.config = options.config;
  report.ordering = options.ordering;

  auto common = CommonAttributes(report.score_tables);
  if (common.empty()) throw Error(ErrorCode::kEmptyIntersection, "the products share no card words");

  auto partition = PartitionByPolarity(common, lexicon, options.ordering, options.strict);
  std::sort(common.begin(), common.end());
  report.common_attributes = std::move(common);

  for (const auto& table : report.score_tables) {
    for (const auto& [word, total] : table.totals) report.labels.emplace(word, lexicon.Display(word));
  }

  report.positive = EvaluateGroup(report.score_tables, report.products, std::move(partition.positive), options.config);
  report.negative = EvaluateGroup(report.score_tables, report.products, std::move(partition.negative), options.config);
  return report;
}

std::string FormatHalfUp(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  // Guard against representation error just below a half, e.g. 0.1245 -> 124.4999...
  const double scaled = std::floor(std::abs(value) * scale + 0.5 + 1e-9);
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << std::copysign(scaled / scale, value);
  return out.str();
}

// ---------------------------------------------------------------------------
// Markdown

namespace {

constexpr int kSmopDisplayDigits = 3;
constexpr int kValueDisplayDigits = 2;

std::string JoinProducts(const std::vector<std::string>& products, std::string_view sep) {
  std::string joined;
  for (std::size_t i = 0; i < products.size(); ++i) {
    if (i) joined += sep;
    joined += products[i];
  }
  return joined;
}

void TableHeader(std::ostream& out, const std::string& first, const std::vector<std::string>& columns) {
  out << "| " << first;
  for (const auto& column : columns) out << " | " << column;
  out << " |\n|---";
  for (std::size_t i = 0; i < columns.size(); ++i) out << "|---:";
  out << "|\n";
}

void GroupTotals(std::ostream& out, const ComparisonReport& report, const GroupResult& result) {
  const auto name = std::string(PolarityName(result.group.polarity));
  out << "### " << (result.group.polarity == Polarity::kPositive ? "Positive" : "Negative") << " attributes\n\n";
  if (!result.present()) {
    out << "No common " << name << " attributes.\n\n";
    return;
  }
  TableHeader(out, "Attribute", report.products);
  for (const auto& axis : result.group.axes) {
    out << "| " << report.Label(axis);
    for (const auto& table : report.score_tables) out << " | " << table.TotalOf(axis);
    out << " |\n";
  }
  out << '\n';
}

void GroupProfiles(std::ostream& out, const ComparisonReport& report, const GroupResult& result) {
  const auto name = std::string(PolarityName(result.group.polarity));
  out << "### " << (result.group.polarity == Polarity::kPositive ? "Positive" : "Negative") << " attributes\n\n";
  if (!result.present()) {
    out << "No common " << name << " attributes.\n\n";
    return;
  }
  out << "Divisor (largest total in group): " << *result.maximum << "\n\n";
  TableHeader(out, "Attribute", report.products);
  for (std::size_t a = 0; a < result.group.axes.size(); ++a) {
    out << "| " << report.Label(result.group.axes[a]);
    for (const auto& profile : result.profiles) out << " | " << FormatHalfUp(profile.values[a], kValueDisplayDigits);
    out << " |\n";
  }
  out << '\n';
}

void GroupSmop(std::ostream& out, const ComparisonReport& report, const GroupResult& result) {
  const auto name = std::string(PolarityName(result.group.polarity));
  out << "### " << (result.group.polarity == Polarity::kPositive ? "Positive" : "Negative") << " attributes\n\n";
  if (!result.present()) {
    out << "No common " << name << " attributes.\n\n";
    return;
  }
  if (!result.smop_eligible()) {
    out << "SMOP not computed: only " << result.group.axes.size() << " common " << name
        << " attribute(s); at least 3 axes are required.\n\n";
    return;
  }
  out << "| Product | SMOP | Axes |\n|---|---:|---:|\n";
  for (std::size_t p = 0; p < report.products.size(); ++p) {
    out << "| " << report.products[p] << " | " << FormatHalfUp(*result.smop[p], kSmopDisplayDigits) << " | "
        << result.group.axes.size() << " |\n";
  }
  out << '\n';
}

void GroupVerdict(std::ostream& out, const GroupResult& result) {
  const bool positive = result.group.polarity == Polarity::kPositive;
  out << "- " << (positive ? "Positive" : "Negative") << " attributes ("
      << (positive ? "larger area is better" : "smaller area is better") << "): ";
  if (result.verdict.empty()) {
    out << "no ranking available.\n";
    return;
  }
  for (std::size_t i = 0; i < result.verdict.size(); ++i) {
    const auto& entry = result.verdict[i];
    if (i) out << (entry.rank == result.verdict[i - 1].rank ? " = " : " > ");
    out << entry.product_id << " (" << FormatHalfUp(*result.SmopOf(entry.product_id), kSmopDisplayDigits) << ")";
  }
  out << '\n';
}

}  // namespace

std::string RenderMarkdownReport(const ComparisonReport& report) {
  std::ostringstream out;
  out << "# Product reaction card comparison: " << JoinProducts(report.products, " vs ") << "\n\n";
  out << "Lexicon `" << report.lexicon_name << "`, normalization `" << report.config.Name() << "`, axis order `"
      << report.ordering.Name() << "`.\n\n";

  out << "## Total scores\n\n";
  for (const auto& table : report.score_tables) {
    out << "### " << table.product_id << " (" << table.participant_count << " participants, grand total "
        << table.GrandTotal() << ")\n\n";
    out << "| Attribute | Total |\n|---|---:|\n";
    for (const auto& [word, total] : table.Ranked()) out << "| " << report.Label(word) << " | " << total << " |\n";
    out << '\n';
  }

  out << "## Common attributes\n\n";
  TableHeader(out, "Attribute", report.products);
  for (const auto& word : report.common_attributes) {
    out << "| " << report.Label(word);
    for (const auto& table : report.score_tables) out << " | " << table.TotalOf(word);
    out << " |\n";
  }
  out << '\n';

  out << "## Common attributes by polarity\n\n";
  GroupTotals(out, report, report.positive);
  GroupTotals(out, report, report.negative);

  out << "## Normalized scores\n\n";
  GroupProfiles(out, report, report.positive);
  GroupProfiles(out, report, report.negative);

  out << "## SMOP summary\n\n";
  GroupSmop(out, report, report.positive);
  GroupSmop(out, report, report.negative);

  out << "## Verdict\n\n";
  GroupVerdict(out, report.positive);
  GroupVerdict(out, report.negative);

  if (!report.warnings.empty()) {
    out << "\n## Warnings\n\n";
    for (const auto& warning : report.warnings) out << "- " << warning << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json OptionalNumber(const std::optional<double>& value) { return value ? json(*value) : json(nullptr); }

json GroupToJson(const GroupResult& result) {
  json group;
  group["axes"] = result.group.axes;
  group["maximum"] = result.maximum ? json(*result.maximum) : json(nullptr);
  group["smop_eligible"] = result.smop_eligible();
  return group;
}

}  // namespace

std::string RenderJsonReport(const ComparisonReport& report) {
  json root;
  root["products"] = report.products;
  root["lexicon"] = report.lexicon_name;
  root["config"] = {{"mode", report.config.Name()},
                    {"ordering", report.ordering.Name()},
                    {"explicit_order", report.ordering.explicit_order}};
  root["common_attributes"] = report.common_attributes;
  root["labels"] = report.labels;

  json tables = json::object();
  for (const auto& table : report.score_tables) {
    tables[table.product_id] = {{"participants", table.participant_count},
                                {"totals", table.totals},
                                {"first_seen", table.first_seen}};
  }
  root["score_tables"] = tables;

  for (const auto* result : {&report.positive, &report.negative}) {
    const auto polarity = std::string(PolarityName(result->group.polarity));
    root["groups"][polarity] = GroupToJson(*result);
    json profiles = json::object();
    json smop = json::object();
    for (std::size_t p = 0; p < result->profiles.size(); ++p) {
      profiles[result->profiles[p].product_id] = result->profiles[p].values;
      smop[result->profiles[p].product_id] = OptionalNumber(result->smop[p]);
    }
    root["profiles"][polarity] = profiles;
    root["smop"][polarity] = smop;
    json verdict = json::array();
    for (const auto& entry : result->verdict) verdict.push_back({{"product", entry.product_id}, {"rank", entry.rank}});
    root["verdict"][polarity] = verdict;
  }
  root["warnings"] = report.warnings;
  return root.dump(2) + "\n";
}

ComparisonReport ParseJsonReport(const std::string& document) {
  ComparisonReport report;
  try {
    const auto root = json::parse(document);
    report.products = root.at("products").get<std::vector<std::string>>();
    report.lexicon_name = root.at("lexicon").get<std::string>();
    report.config = NormalizationConfig::Parse(root.at("config").at("mode").get<std::string>());
    const auto ordering = root.at("config").at("ordering").get<std::string>();
    report.ordering.kind = ordering == "input"      ? AxisOrdering::Kind::kInput
                           : ordering == "explicit" ? AxisOrdering::Kind::kExplicit
                                                    : AxisOrdering::Kind::kAlphabetical;
    report.ordering.explicit_order = root.at("config").at("explicit_order").get<std::vector<std::string>>();
    report.common_attributes = root.at("common_attributes").get<std::vector<std::string>>();
    report.labels = root.at("labels").get<std::map<std::string, std::string>>();
    for (const auto& product : report.products) {
      const auto& t = root.at("score_tables").at(product);
      ScoreTable table;
      table.product_id = product;
      table.participant_count = t.at("participants").get<std::size_t>();
      table.totals = t.at("totals").get<std::map<std::string, int>>();
      table.first_seen = t.at("first_seen").get<std::vector<std::string>>();
      report.score_tables.push_back(std::move(table));
    }
    for (auto* result : {&report.positive, &report.negative}) {
      const auto polarity = result == &report.positive ? Polarity::kPositive : Polarity::kNegative;
      const auto name = std::string(PolarityName(polarity));
      const auto& group = root.at("groups").at(name);
      result->group = {polarity, group.at("axes").get<std::vector<std::string>>()};
      if (!group.at("maximum").is_null()) result->maximum = group.at("maximum").get<int>();
      for (const auto& product : report.products) {
        result->profiles.push_back(
            {product, polarity, root.at("profiles").at(name).at(product).get<std::vector<double>>()});
        const auto& value = root.at("smop").at(name).at(product);
        result->smop.push_back(value.is_null() ? std::nullopt : std::optional<double>(value.get<double>()));
      }
      for (const auto& entry : root.at("verdict").at(name)) {
        result->verdict.push_back({entry.at("product").get<std::string>(), entry.at("rank").get<int>()});
      }
    }
    report.warnings = root.at("warnings").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("report JSON: ") + e.what());
  }
  return report;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

// Shortest representation that parses back to the same double.
std::string Shortest(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

}  // namespace

std::string RenderCsvReport(const ComparisonReport& report) {
  std::ostringstream out;
  out << "record,polarity,attribute,product,value\n";
  for (const auto* result : {&report.positive, &report.negative}) {
    const auto polarity = PolarityName(result->group.polarity);
    for (std::size_t a = 0; a < result->group.axes.size(); ++a) {
      const auto& axis = result->group.axes[a];
      for (std::size_t p = 0; p < report.products.size(); ++p) {
        out << "total," << polarity << ',' << axis << ',' << report.products[p] << ','
            << report.score_tables[p].TotalOf(axis) << '\n';
        out << "normalized," << polarity << ',' << axis << ',' << report.products[p] << ','
            << Shortest(result->profiles[p].values[a]) << '\n';
      }
    }
    for (std::size_t p = 0; p < result->smop.size(); ++p) {
      out << "smop," << polarity << ",," << report.products[p] << ',';
      if (result->smop[p]) out << Shortest(*result->smop[p]);
      out << '\n';
    }
    for (const auto& entry : result->verdict) {
      out << "rank," << polarity << ",," << entry.product_id << ',' << entry.rank << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Score tables

std::string RenderScoreTable(const ScoreTable& table, const Lexicon& lexicon, const std::string& format) {
  std::ostringstream out;
  const auto rows = table.Ranked();
  if (format == "json") {
    json root;
    root["product"] = table.product_id;
    root["participants"] = table.participant_count;
    root["grand_total"] = table.GrandTotal();
    json totals = json::array();
    for (const auto& [word, total] : rows) totals.push_back({{"word", lexicon.Display(word)}, {"key", word}, {"total", total}});
    root["totals"] = totals;
    out << root.dump(2) << '\n';
  } else if (format == "md") {
    out << "| Attribute | Total |\n|---|---:|\n";
    for (const auto& [word, total] : rows) out << "| " << lexicon.Display(word) << " | " << total << " |\n";
  } else {
    out << "word,total\n";
    for (const auto& [word, total] : rows) out << lexicon.Display(word) << ',' << total << '\n';
  }
  return out.str();
}

}  // namespace prc
