#include "prc/lexicon.hpp"

#include <cctype>
#include <cmath>
#include <json.hpp>

#include "bundled_data.hpp"
#include "prc/error.hpp"
#include "text_util.hpp"

namespace prc {

std::string_view PolarityName(Polarity polarity) {
  return polarity == Polarity::kPositive ? "positive" : "negative";
}

std::string Canonicalize(std::string_view raw) {
  std::string key;
  key.reserve(raw.size());
  bool pending_space = false;
  for (const char c : raw) {
    const auto uc = static_cast<unsigned char>(c);
    if (c == '-' || std::isspace(uc)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !key.empty()) key += ' ';
    pending_space = false;
    key += static_cast<char>(std::tolower(uc));
  }
  if (key.empty()) throw Error(ErrorCode::kInvalidWord, "empty card word");
  return key;
}

Lexicon::Lexicon(std::string name, std::vector<LexiconEntry> entries,
                 std::optional<std::size_t> expected_size)
    : name_(std::move(name)), entries_(std::move(entries)), expected_size_(expected_size) {
  if (entries_.empty()) throw Error(ErrorCode::kInvalidWord, "lexicon '" + name_ + "' has no entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& word = entries_[i].word;
    word.key = Canonicalize(word.display.empty() ? word.key : word.display);
    if (word.display.empty()) word.display = word.key;
    if (!index_.emplace(word.key, i).second) throw Error(ErrorCode::kDuplicateWord, word.key);
  }
}

const LexiconEntry* Lexicon::Find(std::string_view word) const {
  const auto it = index_.find(Canonicalize(word));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

bool Lexicon::Contains(std::string_view word) const { return Find(word) != nullptr; }

Polarity Lexicon::Classify(std::string_view word) const {
  if (const auto* entry = Find(word)) return entry->polarity;
  throw Error(ErrorCode::kUnknownWord, Canonicalize(word));
}

std::string Lexicon::Display(std::string_view word) const {
  if (const auto* entry = Find(word)) return entry->word.display;
  return Canonicalize(word);
}

namespace {

Polarity ParsePolarity(std::string_view label, const std::string& where) {
  std::string lower;
  for (const char c : detail::Trim(label)) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "positive") return Polarity::kPositive;
  if (lower == "negative") return Polarity::kNegative;
  throw Error(ErrorCode::kInvalidPolarity, where + ": '" + std::string(label) + "'");
}

LexiconEntry MakeEntry(std::string_view word, std::string_view polarity, const std::string& where) {
  const auto display = std::string(detail::Trim(word));
  if (display.empty()) throw Error(ErrorCode::kParseError, where + ": missing word");
  return {{Canonicalize(display), display}, ParsePolarity(polarity, where)};
}

std::vector<LexiconEntry> EntriesFromCsv(std::string_view document) {
  auto records = detail::ReadCsv(document);
  if (records.empty()) throw Error(ErrorCode::kParseError, "line 1: missing header 'word,polarity'");
  const auto& header = records.front();
  if (header.fields.size() != 2 || Canonicalize(header.fields[0]) != "word" ||
      Canonicalize(header.fields[1]) != "polarity")
    throw Error(ErrorCode::kParseError, "line " + std::to_string(header.line) + ": expected header 'word,polarity'");
  std::vector<LexiconEntry> entries;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& record = records[i];
    const auto where = "line " + std::to_string(record.line);
    if (record.fields.size() != 2) throw Error(ErrorCode::kParseError, where + ": expected 2 fields");
    entries.push_back(MakeEntry(record.fields[0], record.fields[1], where));
  }
  return entries;
}

std::vector<LexiconEntry> EntriesFromJson(std::string_view document) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!root.is_array()) throw Error(ErrorCode::kParseError, "lexicon JSON must be an array");
  std::vector<LexiconEntry> entries;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const auto& item = root[i];
    const auto where = "record " + std::to_string(i + 1);
    if (!item.is_object() || !item.contains("word") || !item.contains("polarity") ||
        !item["word"].is_string() || !item["polarity"].is_string())
      throw Error(ErrorCode::kParseError, where + ": expected {\"word\", \"polarity\"} strings");
    entries.push_back(MakeEntry(item["word"].get<std::string>(), item["polarity"].get<std::string>(), where));
  }
  return entries;
}

}  // namespace

Lexicon LoadLexicon(std::string_view document, DocumentFormat format, std::string name,
                    std::optional<std::size_t> expected_size) {
  auto entries = format == DocumentFormat::kJson ? EntriesFromJson(document) : EntriesFromCsv(document);
  return Lexicon(std::move(name), std::move(entries), expected_size);
}

Lexicon LoadLexiconFile(const std::string& path) {
  const auto format = detail::EndsWithIgnoreCase(path, ".json") ? DocumentFormat::kJson : DocumentFormat::kCsv;
  return LoadLexicon(detail::ReadFile(path), format, path);
}

const Lexicon& DefaultLexicon() {
  static const Lexicon lexicon =
      LoadLexicon(detail::kBundledLexiconCsv, DocumentFormat::kCsv, "default", Lexicon::kDefaultDeckSize);
  return lexicon;
}

LexiconReport ValidateLexicon(const Lexicon& lexicon) {
  LexiconReport report;
  report.size = lexicon.size();
  std::size_t positives = 0;
  for (const auto& entry : lexicon.entries()) positives += entry.polarity == Polarity::kPositive;
  report.positive_fraction = static_cast<double>(positives) / static_cast<double>(report.size);
  if (lexicon.expected_size() && *lexicon.expected_size() != report.size) {
    report.warnings.push_back("expected " + std::to_string(*lexicon.expected_size()) + " cards, found " +
                              std::to_string(report.size));
  }
  if (std::abs(report.positive_fraction - Lexicon::kExpectedPositiveFraction) > Lexicon::kPositiveFractionTolerance) {
    report.warnings.push_back("positive fraction " + std::to_string(report.positive_fraction) +
                              " deviates from 0.60 by more than 0.05");
  }
  return report;
}

}  // namespace prc
