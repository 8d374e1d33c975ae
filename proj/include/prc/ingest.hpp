#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prc/lexicon.hpp"

namespace prc {

inline constexpr int kMinRank = 1;
inline constexpr int kMaxRank = 5;

struct Pick {
  std::string word;  // canonical key
  int rank = 0;

  friend bool operator==(const Pick&, const Pick&) = default;
};

struct RankedSelection {
  std::string participant_id;
  std::vector<Pick> picks;  // in column order, rank 5 first

  friend bool operator==(const RankedSelection&, const RankedSelection&) = default;
};

struct EvaluationDataset {
  std::string product_id;
  std::vector<RankedSelection> selections;
  std::string lexicon_ref;
  // Canonical words not found in the lexicon. Only populated in non-strict
  // mode; strict parsing throws instead.
  std::vector<std::string> unknown_words;

  std::size_t PickCount() const;

  friend bool operator==(const EvaluationDataset&, const EvaluationDataset&) = default;
};

enum class BundledStudy { kCap, kEap };

// CSV: header `participant_id,rank5,rank4,rank3,rank2,rank1`.
// JSON: {"product": ..., "participants": [{"id": ..., "picks": [{"word", "rank"}]}]}.
// For CSV the product id comes from `product_id`; for JSON a non-empty
// `product_id` overrides the document's own field.
EvaluationDataset ParseSessions(std::string_view document, DocumentFormat format,
                                const Lexicon& lexicon, bool strict = true,
                                std::string product_id = {});

EvaluationDataset ParseSessionsFile(const std::string& path, const Lexicon& lexicon,
                                    bool strict = true, std::string product_id = {});

// Serializes back to the session CSV layout using canonical keys.
std::string SessionsToCsv(const EvaluationDataset& dataset);

const EvaluationDataset& BundledDataset(BundledStudy which);

}  // namespace prc
