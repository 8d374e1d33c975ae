#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "prc/ingest.hpp"

namespace prc {

struct ScoreTable {
  std::string product_id;
  std::map<std::string, int> totals;
  // Words in order of first appearance in the dataset.
  std::vector<std::string> first_seen;
  std::size_t participant_count = 0;

  int TotalOf(const std::string& word) const;
  bool Contains(const std::string& word) const { return totals.count(word) != 0; }
  int GrandTotal() const;

  // (word, total) sorted by descending total, ties by canonical key.
  std::vector<std::pair<std::string, int>> Ranked() const;

  friend bool operator==(const ScoreTable&, const ScoreTable&) = default;
};

using RankWeighting = std::function<int(int rank)>;

// Identity: Ranking1 = 1 ... Ranking5 = 5. Throws kInvalidRank outside 1..5.
int WeightOfRank(int rank);

ScoreTable AggregateScores(const EvaluationDataset& dataset,
                           const RankWeighting& weighting = WeightOfRank);

bool ScoreConservationCheck(const EvaluationDataset& dataset, const ScoreTable& table);

}  // namespace prc
