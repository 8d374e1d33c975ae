#include "prc/scoring.hpp"

#include <algorithm>

#include "prc/error.hpp"

namespace prc {

int ScoreTable::TotalOf(const std::string& word) const {
  const auto it = totals.find(word);
  return it == totals.end() ? 0 : it->second;
}

int ScoreTable::GrandTotal() const {
  int sum = 0;
  for (const auto& [word, total] : totals) sum += total;
  return sum;
}

std::vector<std::pair<std::string, int>> ScoreTable::Ranked() const {
  std::vector<std::pair<std::string, int>> rows(totals.begin(), totals.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return rows;
}

int WeightOfRank(int rank) {
  if (rank < kMinRank || rank > kMaxRank) throw Error(ErrorCode::kInvalidRank, std::to_string(rank));
  return rank;
}

ScoreTable AggregateScores(const EvaluationDataset& dataset, const RankWeighting& weighting) {
  ScoreTable table;
  table.product_id = dataset.product_id;
  table.participant_count = dataset.selections.size();
  for (const auto& selection : dataset.selections) {
    for (const auto& pick : selection.picks) {
      auto [it, inserted] = table.totals.try_emplace(pick.word, 0);
      if (inserted) table.first_seen.push_back(pick.word);
      it->second += weighting(pick.rank);
    }
  }
  return table;
}

bool ScoreConservationCheck(const EvaluationDataset& dataset, const ScoreTable& table) {
  int expected = 0;
  for (const auto& selection : dataset.selections) {
    for (const auto& pick : selection.picks) expected += pick.rank;
  }
  return table.GrandTotal() == expected;
}

}  // namespace prc
