#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "golden.hpp"
#include "prc/error.hpp"
#include "prc/scoring.hpp"

namespace prc {
namespace {

TEST_CASE("weight of rank is the identity on 1..5") {
  for (int rank = 1; rank <= 5; ++rank) CHECK(WeightOfRank(rank) == rank);
  for (const int bad : {0, 6, -1}) {
    try {
      WeightOfRank(bad);
      FAIL("expected InvalidRank");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidRank);
    }
  }
}

TEST_CASE("bundled totals") {
  const auto cap = AggregateScores(BundledDataset(BundledStudy::kCap));
  const auto eap = AggregateScores(BundledDataset(BundledStudy::kEap));
  CHECK(cap.TotalOf("ambiguous") == 25);
  CHECK(eap.TotalOf("useful") == 37);
  CHECK(cap.TotalOf("unrefined") == 1);
  CHECK(eap.TotalOf("business like") == 4);
  CHECK(cap.participant_count == 16);
  CHECK(cap.GrandTotal() == golden::kCapGrandTotal);
  CHECK(eap.GrandTotal() == golden::kEapGrandTotal);
  CHECK(ScoreConservationCheck(BundledDataset(BundledStudy::kCap), cap));
  CHECK(ScoreConservationCheck(BundledDataset(BundledStudy::kEap), eap));
}

TEST_CASE("conservation check detects tampering") {
  auto cap = AggregateScores(BundledDataset(BundledStudy::kCap));
  cap.totals["ambiguous"] -= 1;
  CHECK_FALSE(ScoreConservationCheck(BundledDataset(BundledStudy::kCap), cap));
}

TEST_CASE("empty dataset yields empty totals") {
  const EvaluationDataset empty{"E", {}, "default", {}};
  const auto table = AggregateScores(empty);
  CHECK(table.totals.empty());
  CHECK(table.GrandTotal() == 0);
  CHECK(ScoreConservationCheck(empty, table));
}

TEST_CASE("ranked rows break ties alphabetically") {
  const auto cap = AggregateScores(BundledDataset(BundledStudy::kCap));
  const auto rows = cap.Ranked();
  REQUIRE(rows.size() == 38);
  CHECK(rows[0] == std::pair<std::string, int>{"ambiguous", 25});
  CHECK(rows[4] == std::pair<std::string, int>{"simple", 11});
  CHECK(rows[5] == std::pair<std::string, int>{"unattractive", 11});
  CHECK(rows.back() == std::pair<std::string, int>{"unrefined", 1});
}

TEST_CASE("custom weighting hook") {
  const auto table = AggregateScores(BundledDataset(BundledStudy::kEap), [](int) { return 1; });
  CHECK(table.GrandTotal() == 80);
}

EvaluationDataset RandomDataset(std::mt19937_64& rng, const std::string& prefix) {
  const auto& entries = DefaultLexicon().entries();
  EvaluationDataset dataset{"R", {}, "default", {}};
  const int participants = static_cast<int>(rng() % 12);
  for (int p = 0; p < participants; ++p) {
    RankedSelection selection{prefix + std::to_string(p), {}};
    std::vector<std::size_t> idx(entries.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int rank = 5; rank >= 1; --rank) {
      if (rank == 5 || rng() % 3 != 0) selection.picks.push_back({entries[idx[rank]].word.key, rank});
    }
    dataset.selections.push_back(std::move(selection));
  }
  return dataset;
}

TEST_CASE("property: permutation invariance, additivity, bound") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = RandomDataset(rng, "a");
    const auto b = RandomDataset(rng, "b");
    const auto table_a = AggregateScores(a);

    auto shuffled = a;
    std::shuffle(shuffled.selections.begin(), shuffled.selections.end(), rng);
    for (auto& s : shuffled.selections) std::shuffle(s.picks.begin(), s.picks.end(), rng);
    CHECK(AggregateScores(shuffled).totals == table_a.totals);

    auto combined = a;
    combined.selections.insert(combined.selections.end(), b.selections.begin(), b.selections.end());
    auto expected = table_a.totals;
    for (const auto& [word, total] : AggregateScores(b).totals) expected[word] += total;
    CHECK(AggregateScores(combined).totals == expected);

    for (const auto& [word, total] : table_a.totals) {
      CHECK(total >= 1);
      CHECK(total <= 5 * static_cast<int>(table_a.participant_count));
    }
    CHECK(ScoreConservationCheck(a, table_a));
  }
}

}  // namespace
}  // namespace prc
