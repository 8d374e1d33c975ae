#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prc {

enum class Polarity { kPositive, kNegative };

std::string_view PolarityName(Polarity polarity);

// Lowercases, treats hyphens as spaces, trims and collapses whitespace.
// Throws Error(kInvalidWord) if nothing is left.
std::string Canonicalize(std::string_view raw);

struct CanonicalWord {
  std::string key;
  std::string display;
};

struct LexiconEntry {
  CanonicalWord word;
  Polarity polarity;
};

enum class DocumentFormat { kCsv, kJson };

struct LexiconReport {
  std::size_t size = 0;
  double positive_fraction = 0.0;
  std::vector<std::string> warnings;
};

class Lexicon {
 public:
  static constexpr std::size_t kDefaultDeckSize = 118;
  static constexpr double kExpectedPositiveFraction = 0.60;
  static constexpr double kPositiveFractionTolerance = 0.05;

  // Throws kDuplicateWord on canonical collisions and kInvalidWord when
  // `entries` is empty.
  Lexicon(std::string name, std::vector<LexiconEntry> entries,
          std::optional<std::size_t> expected_size = std::nullopt);

  const std::string& name() const { return name_; }
  std::optional<std::size_t> expected_size() const { return expected_size_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<LexiconEntry>& entries() const { return entries_; }

  bool Contains(std::string_view word) const;
  const LexiconEntry* Find(std::string_view word) const;

  // Throws kUnknownWord when the canonical form is not a card.
  Polarity Classify(std::string_view word) const;

  // Preferred presentation form; falls back to the canonical key for unknown
  // words.
  std::string Display(std::string_view word) const;

 private:
  std::string name_;
  std::vector<LexiconEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::optional<std::size_t> expected_size_;
};

// CSV: header `word,polarity`, `#` comment lines ignored.
// JSON: array of {"word": ..., "polarity": ...}.
Lexicon LoadLexicon(std::string_view document, DocumentFormat format,
                    std::string name = "custom",
                    std::optional<std::size_t> expected_size = std::nullopt);

Lexicon LoadLexiconFile(const std::string& path);

// The bundled 118-card deck (data/lexicon.csv compiled in).
const Lexicon& DefaultLexicon();

LexiconReport ValidateLexicon(const Lexicon& lexicon);

}  // namespace prc
