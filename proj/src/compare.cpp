#include "prc/compare.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "prc/error.hpp"

namespace prc {

std::string NormalizationConfig::Name() const {
  switch (mode) {
    case Mode::kExact: return "exact";
    case Mode::kTruncate: return "truncate" + std::to_string(digits);
    case Mode::kRound: return "round" + std::to_string(digits);
  }
  return "exact";
}

NormalizationConfig NormalizationConfig::Parse(const std::string& name) {
  if (name == "exact") return Exact();
  const auto parse_digits = [&](std::size_t prefix) {
    const auto tail = name.substr(prefix);
    if (tail.empty() || tail.size() > 2 || !std::all_of(tail.begin(), tail.end(), ::isdigit))
      throw Error(ErrorCode::kParseError, "invalid normalization mode '" + name + "'");
    const int k = std::stoi(tail);
    if (k < 1 || k > 15) throw Error(ErrorCode::kParseError, "digits must be in 1..15: '" + name + "'");
    return k;
  };
  if (name.starts_with("truncate")) return Truncate(parse_digits(8));
  if (name.starts_with("round")) return Round(parse_digits(5));
  throw Error(ErrorCode::kParseError, "invalid normalization mode '" + name + "'");
}

std::string AxisOrdering::Name() const {
  switch (kind) {
    case Kind::kAlphabetical: return "alpha";
    case Kind::kInput: return "input";
    case Kind::kExplicit: return "explicit";
  }
  return "alpha";
}

std::vector<std::string> CommonAttributes(const std::vector<ScoreTable>& tables) {
  if (tables.size() < 2)
    throw Error(ErrorCode::kInsufficientProducts, "need at least 2 score tables, got " + std::to_string(tables.size()));
  std::vector<std::string> common;
  for (const auto& word : tables.front().first_seen) {
    const bool everywhere = std::all_of(tables.begin() + 1, tables.end(),
                                        [&](const ScoreTable& table) { return table.Contains(word); });
    if (everywhere) common.push_back(word);
  }
  return common;
}

AttributeGroup OrderAxes(AttributeGroup group, const AxisOrdering& ordering) {
  switch (ordering.kind) {
    case AxisOrdering::Kind::kInput:
      break;
    case AxisOrdering::Kind::kAlphabetical:
      std::sort(group.axes.begin(), group.axes.end());
      break;
    case AxisOrdering::Kind::kExplicit: {
      std::vector<std::string> wanted;
      for (const auto& word : ordering.explicit_order) wanted.push_back(Canonicalize(word));
      auto have = group.axes;
      auto sorted_wanted = wanted;
      std::sort(have.begin(), have.end());
      std::sort(sorted_wanted.begin(), sorted_wanted.end());
      if (have != sorted_wanted)
        throw Error(ErrorCode::kInvalidOrdering, "explicit axis list is not a permutation of the " +
                                                     std::string(PolarityName(group.polarity)) + " axes");
      group.axes = std::move(wanted);
      break;
    }
  }
  return group;
}

PolarityPartition PartitionByPolarity(const std::vector<std::string>& words, const Lexicon& lexicon,
                                      const AxisOrdering& ordering, bool strict) {
  PolarityPartition partition;
  for (const auto& word : words) {
    const auto* entry = lexicon.Find(word);
    if (entry == nullptr) {
      if (strict) throw Error(ErrorCode::kUnknownWord, Canonicalize(word));
      partition.unclassified.push_back(Canonicalize(word));
      continue;
    }
    auto& group = entry->polarity == Polarity::kPositive ? partition.positive : partition.negative;
    group.axes.push_back(entry->word.key);
  }
  if (ordering.kind == AxisOrdering::Kind::kExplicit) {
    // One explicit list may cover both groups; each group takes its own words.
    std::set<std::string> placed;
    for (auto* group : {&partition.positive, &partition.negative}) {
      AxisOrdering own{AxisOrdering::Kind::kExplicit, {}};
      for (const auto& word : ordering.explicit_order) {
        const auto key = Canonicalize(word);
        if (std::find(group->axes.begin(), group->axes.end(), key) != group->axes.end()) {
          own.explicit_order.push_back(key);
          placed.insert(key);
        }
      }
      *group = OrderAxes(std::move(*group), own);
    }
    for (const auto& word : ordering.explicit_order) {
      if (!placed.count(Canonicalize(word)))
        throw Error(ErrorCode::kInvalidOrdering, "'" + Canonicalize(word) + "' is not a common attribute");
    }
  } else {
    partition.positive = OrderAxes(std::move(partition.positive), ordering);
    partition.negative = OrderAxes(std::move(partition.negative), ordering);
  }
  return partition;
}

double ReduceRatio(long long numerator, long long denominator, const NormalizationConfig& config) {
  if (config.mode == NormalizationConfig::Mode::kExact)
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  long long scale = 1;
  for (int i = 0; i < config.digits; ++i) scale *= 10;
  // Scores are non-negative, so floor division is truncation toward zero.
  long long scaled = 0;
  if (config.mode == NormalizationConfig::Mode::kTruncate) {
    scaled = numerator * scale / denominator;
  } else {
    scaled = (2 * numerator * scale + denominator) / (2 * denominator);
  }
  return static_cast<double>(scaled) / static_cast<double>(scale);
}

std::optional<int> GroupMaximum(const std::vector<ScoreTable>& tables, const AttributeGroup& group) {
  std::optional<int> maximum;
  for (const auto& table : tables) {
    for (const auto& axis : group.axes) {
      if (!table.Contains(axis)) throw Error(ErrorCode::kMissingAttribute, table.product_id + ": '" + axis + "'");
      maximum = std::max(maximum.value_or(0), table.TotalOf(axis));
    }
  }
  return maximum;
}

std::vector<NormalizedProfile> Normalize(const std::vector<ScoreTable>& tables, const AttributeGroup& group,
                                         const NormalizationConfig& config) {
  if (config.mode != NormalizationConfig::Mode::kExact && config.digits < 1)
    throw Error(ErrorCode::kParseError, "reduction digits must be at least 1");
  const auto maximum = GroupMaximum(tables, group);
  std::vector<NormalizedProfile> profiles;
  for (const auto& table : tables) {
    NormalizedProfile profile{table.product_id, group.polarity, {}};
    for (const auto& axis : group.axes) profile.values.push_back(ReduceRatio(table.TotalOf(axis), *maximum, config));
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

}  // namespace prc
