#include "prc/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "prc/error.hpp"
#include "prc/ingest.hpp"
#include "prc/report.hpp"
#include "prc/smop.hpp"
#include "text_util.hpp"

namespace prc {
namespace {

constexpr const char* kLexiconEnv = "PRC_LEXICON";

struct CommonOptions {
  std::string lexicon_path;
  std::string out_path;
  bool lenient = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Lexicon ResolveLexicon(const std::string& flag) {
  if (!flag.empty()) return LoadLexiconFile(flag);
  if (const char* env = std::getenv(kLexiconEnv); env != nullptr && *env != '\0') return LoadLexiconFile(env);
  return DefaultLexicon();
}

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> items;
  std::string current;
  const auto flush = [&] {
    const auto trimmed = detail::Trim(current);
    if (!trimmed.empty()) items.emplace_back(trimmed);
    current.clear();
  };
  for (const char c : text) {
    if (c == ',' || c == '\n') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return items;
}

AxisOrdering ParseOrdering(const std::string& flag) {
  if (flag == "alpha") return {};
  if (flag == "input") return {AxisOrdering::Kind::kInput, {}};
  if (flag.starts_with("file:")) {
    std::string words;
    std::istringstream lines(detail::ReadFile(flag.substr(5)));
    for (std::string line; std::getline(lines, line);) {
      if (!detail::Trim(line).starts_with("#")) words += line + "\n";
    }
    return {AxisOrdering::Kind::kExplicit, SplitList(words)};
  }
  throw UsageError("--order must be alpha, input or file:<path>");
}

NormalizationConfig ParseMode(const std::string& flag) {
  if (flag == "truncate2" || flag == "round2" || flag == "exact") return NormalizationConfig::Parse(flag);
  throw UsageError("--mode must be truncate2, round2 or exact");
}

std::vector<double> ParseValues(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : SplitList(text)) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw UsageError("not a number: '" + item + "'");
    values.push_back(value);
  }
  return values;
}

std::string FormatNumber(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  std::string text(buffer, ptr);
  if (text.find_first_of(".en") == std::string::npos) text += ".0";
  return text;
}

std::vector<EvaluationDataset> LoadDatasets(const std::vector<std::string>& paths, const std::string& names,
                                            const Lexicon& lexicon, bool strict) {
  const auto ids = SplitList(names);
  if (!ids.empty() && ids.size() != paths.size()) throw UsageError("--names needs one id per input file");
  std::vector<EvaluationDataset> datasets;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    datasets.push_back(ParseSessionsFile(paths[i], lexicon, strict, ids.empty() ? std::string() : ids[i]));
  }
  return datasets;
}

void Emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + out_path + "'");
  file << text;
}

void ReportWarnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& warning : warnings) err << "prc: warning: " << warning << '\n';
}

void AddCommonOptions(CLI::App* command, CommonOptions& options) {
  command->add_option("--lexicon", options.lexicon_path, "Lexicon CSV/JSON (default: $PRC_LEXICON or bundled deck)");
  command->add_option("--out", options.out_path, "Write output to this file instead of stdout");
  command->add_flag("--lenient", options.lenient, "Warn about unknown words instead of failing");
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Product reaction card scoring and radar-chart (SMOP) comparison", "prc"};
  app.require_subcommand(1);

  CommonOptions score_opts;
  std::string score_file;
  std::string score_format = "csv";
  std::string score_name;
  auto* score = app.add_subcommand("score", "Total rank-weighted score per card word");
  score->add_option("file", score_file, "Session CSV or JSON")->required();
  score->add_option("--format", score_format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "json"}));
  score->add_option("--name", score_name, "Product id (default: file stem)");
  AddCommonOptions(score, score_opts);

  CommonOptions compare_opts;
  std::vector<std::string> compare_files;
  std::string compare_format = "md";
  std::string mode_flag = "truncate2";
  std::string order_flag = "alpha";
  std::string compare_names;
  auto* compare = app.add_subcommand("compare", "Full comparison report across products");
  compare->add_option("files", compare_files, "Session files, one per product")->required()->expected(2, -1);
  compare->add_option("--format", compare_format, "md, json or csv")->check(CLI::IsMember({"md", "json", "csv"}));
  compare->add_option("--mode", mode_flag, "truncate2, round2 or exact");
  compare->add_option("--order", order_flag, "alpha, input or file:<path>");
  compare->add_option("--names", compare_names, "Comma-separated product ids");
  AddCommonOptions(compare, compare_opts);

  std::string values_flag;
  bool oracle = false;
  auto* smop = app.add_subcommand("smop", "Radar polygon area for a list of axis values");
  smop->add_option("--values", values_flag, "Comma-separated axis values")->required();
  smop->add_flag("--oracle", oracle, "Also print the shoelace cross-check");

  CommonOptions chart_opts;
  std::vector<std::string> chart_files;
  std::string polarity_flag;
  std::string chart_mode = "truncate2";
  std::string chart_order = "alpha";
  std::string chart_names;
  std::string chart_title;
  auto* chart = app.add_subcommand("chart", "SVG radar chart for one polarity group");
  chart->add_option("files", chart_files, "Session files (default: bundled CAP and EAP)");
  chart->add_option("--polarity", polarity_flag, "positive or negative")
      ->required()
      ->check(CLI::IsMember({"positive", "negative"}));
  chart->add_option("--mode", chart_mode, "truncate2, round2 or exact");
  chart->add_option("--order", chart_order, "alpha, input or file:<path>");
  chart->add_option("--names", chart_names, "Comma-separated product ids");
  chart->add_option("--title", chart_title, "Chart title");
  AddCommonOptions(chart, chart_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (score->parsed()) {
      const auto lexicon = ResolveLexicon(score_opts.lexicon_path);
      const auto dataset = ParseSessionsFile(score_file, lexicon, !score_opts.lenient, score_name);
      for (const auto& word : dataset.unknown_words) err << "prc: warning: unknown word '" << word << "'\n";
      Emit(RenderScoreTable(AggregateScores(dataset), lexicon, score_format), score_opts.out_path, out);
    } else if (compare->parsed()) {
      const auto lexicon = ResolveLexicon(compare_opts.lexicon_path);
      const ReportOptions options{ParseMode(mode_flag), ParseOrdering(order_flag), !compare_opts.lenient};
      const auto report =
          BuildReport(LoadDatasets(compare_files, compare_names, lexicon, options.strict), lexicon, options);
      ReportWarnings(report.warnings, err);
      const auto text = compare_format == "json"  ? RenderJsonReport(report)
                        : compare_format == "csv" ? RenderCsvReport(report)
                                                  : RenderMarkdownReport(report);
      Emit(text, compare_opts.out_path, out);
    } else if (smop->parsed()) {
      const auto values = ParseValues(values_flag);
      const double area = SmopArea(values);
      if (oracle) {
        out << "formula  " << FormatNumber(area) << '\n';
        out << "shoelace " << FormatNumber(SmopShoelaceOracle(values)) << '\n';
      } else {
        out << FormatNumber(area) << '\n';
      }
    } else if (chart->parsed()) {
      const auto lexicon = ResolveLexicon(chart_opts.lexicon_path);
      const ReportOptions options{ParseMode(chart_mode), ParseOrdering(chart_order), !chart_opts.lenient};
      std::vector<EvaluationDataset> datasets;
      if (chart_files.empty()) {
        datasets = {BundledDataset(BundledStudy::kCap), BundledDataset(BundledStudy::kEap)};
      } else {
        datasets = LoadDatasets(chart_files, chart_names, lexicon, options.strict);
      }
      const auto report = BuildReport(datasets, lexicon, options);
      ReportWarnings(report.warnings, err);
      const auto polarity = polarity_flag == "positive" ? Polarity::kPositive : Polarity::kNegative;
      if (!report.Group(polarity).present())
        throw Error(ErrorCode::kDegenerateProfile, "no common " + polarity_flag + " attributes to chart");
      auto spec = MakeRadarChartSpec(report, polarity);
      if (!chart_title.empty()) spec.title = chart_title;
      Emit(RenderRadarSvg(spec), chart_opts.out_path, out);
    }
  } catch (const UsageError& e) {
    err << "prc: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "prc: error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace prc
