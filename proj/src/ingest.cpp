#include "prc/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <json.hpp>
#include <set>
#include <sstream>

#include "bundled_data.hpp"
#include "prc/error.hpp"
#include "text_util.hpp"

namespace prc {

std::size_t EvaluationDataset::PickCount() const {
  std::size_t count = 0;
  for (const auto& selection : selections) count += selection.picks.size();
  return count;
}

namespace {

struct RawPick {
  std::string word;
  int rank = 0;
};

// Shared validation for both input formats. Appends to `dataset`.
void AddSelection(EvaluationDataset& dataset, std::set<std::string>& seen_ids,
                  std::string participant_id, const std::vector<RawPick>& raw,
                  const Lexicon& lexicon, bool strict) {
  participant_id = std::string(detail::Trim(participant_id));
  if (participant_id.empty()) throw Error(ErrorCode::kParseError, "empty participant id");
  if (!seen_ids.insert(participant_id).second) throw Error(ErrorCode::kDuplicateParticipant, participant_id);

  RankedSelection selection{participant_id, {}};
  std::set<int> ranks;
  std::set<std::string> words;
  for (const auto& pick : raw) {
    if (pick.rank < kMinRank || pick.rank > kMaxRank)
      throw Error(ErrorCode::kInvalidSelection, participant_id + ": rank " + std::to_string(pick.rank) + " outside 1..5");
    std::string key;
    try {
      key = Canonicalize(pick.word);
    } catch (const Error&) {
      throw Error(ErrorCode::kInvalidSelection, participant_id + ": empty word at rank " + std::to_string(pick.rank));
    }
    if (!ranks.insert(pick.rank).second)
      throw Error(ErrorCode::kInvalidSelection, participant_id + ": rank " + std::to_string(pick.rank) + " used twice");
    if (!words.insert(key).second)
      throw Error(ErrorCode::kInvalidSelection, participant_id + ": '" + key + "' picked twice");
    if (!lexicon.Contains(key)) {
      if (strict) throw Error(ErrorCode::kUnknownWord, participant_id + ": '" + key + "'");
      if (std::find(dataset.unknown_words.begin(), dataset.unknown_words.end(), key) == dataset.unknown_words.end())
        dataset.unknown_words.push_back(key);
    }
    selection.picks.push_back({std::move(key), pick.rank});
  }
  std::sort(selection.picks.begin(), selection.picks.end(),
            [](const Pick& a, const Pick& b) { return a.rank > b.rank; });
  if (selection.picks.empty()) throw Error(ErrorCode::kInvalidSelection, participant_id + ": no picks");
  dataset.selections.push_back(std::move(selection));
}

constexpr int kCsvColumns = 1 + kMaxRank;

void ParseCsv(std::string_view document, const Lexicon& lexicon, bool strict, EvaluationDataset& dataset) {
  const auto records = detail::ReadCsv(document);
  if (records.empty()) throw Error(ErrorCode::kParseError, "line 1: missing header");
  const auto& header = records.front();
  static const std::vector<std::string> kExpected = {"participant_id", "rank5", "rank4", "rank3", "rank2", "rank1"};
  bool header_ok = header.fields.size() == kExpected.size();
  for (std::size_t i = 0; header_ok && i < kExpected.size(); ++i) {
    std::string field(detail::Trim(header.fields[i]));
    std::transform(field.begin(), field.end(), field.begin(), [](unsigned char c) { return std::tolower(c); });
    header_ok = field == kExpected[i];
  }
  if (!header_ok)
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(header.line) + ": expected header participant_id,rank5,rank4,rank3,rank2,rank1");

  std::set<std::string> seen_ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    if (record.fields.size() != kCsvColumns)
      throw Error(ErrorCode::kParseError, "line " + std::to_string(record.line) + ": expected " +
                                              std::to_string(kCsvColumns) + " fields, found " +
                                              std::to_string(record.fields.size()));
    std::vector<RawPick> raw;
    for (int column = 1; column < kCsvColumns; ++column) {
      const auto cell = detail::Trim(record.fields[column]);
      if (cell.empty()) continue;
      raw.push_back({std::string(cell), kMaxRank + 1 - column});
    }
    AddSelection(dataset, seen_ids, record.fields[0], raw, lexicon, strict);
  }
}

void ParseJson(std::string_view document, const Lexicon& lexicon, bool strict, EvaluationDataset& dataset) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!root.is_object() || !root.contains("participants") || !root["participants"].is_array())
    throw Error(ErrorCode::kParseError, "expected object with a \"participants\" array");
  if (dataset.product_id.empty() && root.contains("product") && root["product"].is_string())
    dataset.product_id = root["product"].get<std::string>();

  std::set<std::string> seen_ids;
  const auto& participants = root["participants"];
  for (std::size_t i = 0; i < participants.size(); ++i) {
    const auto& item = participants[i];
    const auto where = "participant record " + std::to_string(i + 1);
    if (!item.is_object() || !item.contains("id") || !item["id"].is_string() || !item.contains("picks") ||
        !item["picks"].is_array())
      throw Error(ErrorCode::kParseError, where + ": expected {\"id\": string, \"picks\": array}");
    std::vector<RawPick> raw;
    for (const auto& pick : item["picks"]) {
      if (!pick.is_object() || !pick.contains("word") || !pick["word"].is_string() || !pick.contains("rank") ||
          !pick["rank"].is_number_integer())
        throw Error(ErrorCode::kParseError, where + ": pick needs string \"word\" and integer \"rank\"");
      raw.push_back({pick["word"].get<std::string>(), pick["rank"].get<int>()});
    }
    AddSelection(dataset, seen_ids, item["id"].get<std::string>(), raw, lexicon, strict);
  }
}

}  // namespace

EvaluationDataset ParseSessions(std::string_view document, DocumentFormat format, const Lexicon& lexicon,
                                bool strict, std::string product_id) {
  EvaluationDataset dataset;
  dataset.product_id = std::move(product_id);
  dataset.lexicon_ref = lexicon.name();
  if (format == DocumentFormat::kJson) {
    ParseJson(document, lexicon, strict, dataset);
  } else {
    ParseCsv(document, lexicon, strict, dataset);
  }
  return dataset;
}

EvaluationDataset ParseSessionsFile(const std::string& path, const Lexicon& lexicon, bool strict,
                                    std::string product_id) {
  const bool json = detail::EndsWithIgnoreCase(path, ".json");
  if (product_id.empty() && !json) {
    product_id = std::filesystem::path(path).stem().string();
    std::transform(product_id.begin(), product_id.end(), product_id.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  }
  auto dataset = ParseSessions(detail::ReadFile(path), json ? DocumentFormat::kJson : DocumentFormat::kCsv, lexicon,
                               strict, std::move(product_id));
  if (dataset.product_id.empty()) dataset.product_id = std::filesystem::path(path).stem().string();
  return dataset;
}

std::string SessionsToCsv(const EvaluationDataset& dataset) {
  std::ostringstream out;
  out << "participant_id,rank5,rank4,rank3,rank2,rank1\n";
  for (const auto& selection : dataset.selections) {
    out << selection.participant_id;
    for (int rank = kMaxRank; rank >= kMinRank; --rank) {
      out << ',';
      for (const auto& pick : selection.picks) {
        if (pick.rank == rank) out << pick.word;
      }
    }
    out << '\n';
  }
  return out.str();
}

const EvaluationDataset& BundledDataset(BundledStudy which) {
  static const EvaluationDataset cap =
      ParseSessions(detail::kBundledCapCsv, DocumentFormat::kCsv, DefaultLexicon(), true, "CAP");
  static const EvaluationDataset eap =
      ParseSessions(detail::kBundledEapCsv, DocumentFormat::kCsv, DefaultLexicon(), true, "EAP");
  return which == BundledStudy::kCap ? cap : eap;
}

}  // namespace prc
