#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prc/lexicon.hpp"
#include "prc/scoring.hpp"

namespace prc {

struct NormalizationConfig {
  enum class Mode { kExact, kTruncate, kRound };

  Mode mode = Mode::kTruncate;
  int digits = 2;

  static NormalizationConfig Exact() { return {Mode::kExact, 0}; }
  static NormalizationConfig Truncate(int k) { return {Mode::kTruncate, k}; }
  static NormalizationConfig Round(int k) { return {Mode::kRound, k}; }

  // "exact", "truncate2", "round3", ...
  std::string Name() const;
  static NormalizationConfig Parse(const std::string& name);

  friend bool operator==(const NormalizationConfig&, const NormalizationConfig&) = default;
};

struct AxisOrdering {
  enum class Kind { kAlphabetical, kInput, kExplicit };

  Kind kind = Kind::kAlphabetical;
  std::vector<std::string> explicit_order;  // canonical keys, kExplicit only

  std::string Name() const;

  friend bool operator==(const AxisOrdering&, const AxisOrdering&) = default;
};

struct AttributeGroup {
  Polarity polarity = Polarity::kPositive;
  std::vector<std::string> axes;

  friend bool operator==(const AttributeGroup&, const AttributeGroup&) = default;
};

struct NormalizedProfile {
  std::string product_id;
  Polarity polarity = Polarity::kPositive;
  std::vector<double> values;  // aligned with AttributeGroup::axes

  friend bool operator==(const NormalizedProfile&, const NormalizedProfile&) = default;
};

struct PolarityPartition {
  AttributeGroup positive{Polarity::kPositive, {}};
  AttributeGroup negative{Polarity::kNegative, {}};
  // Words skipped in non-strict mode because the lexicon does not know them.
  std::vector<std::string> unclassified;
};

// Intersection of the tables' word sets, in first-appearance order of the
// first table. Throws kInsufficientProducts for fewer than two tables.
std::vector<std::string> CommonAttributes(const std::vector<ScoreTable>& tables);

PolarityPartition PartitionByPolarity(const std::vector<std::string>& words,
                                      const Lexicon& lexicon,
                                      const AxisOrdering& ordering = {}, bool strict = true);

AttributeGroup OrderAxes(AttributeGroup group, const AxisOrdering& ordering);

// Applies the configured reduction to numerator / denominator. Truncate and
// Round are evaluated in integer arithmetic, so decimal boundaries are exact.
double ReduceRatio(long long numerator, long long denominator,
                   const NormalizationConfig& config);

// The divisor is the maximum total over every table and every axis of the
// group, shared by all products.
std::vector<NormalizedProfile> Normalize(const std::vector<ScoreTable>& tables,
                                         const AttributeGroup& group,
                                         const NormalizationConfig& config = {});

// Group-wide maximum used by Normalize; nullopt for an empty group.
std::optional<int> GroupMaximum(const std::vector<ScoreTable>& tables,
                                const AttributeGroup& group);

}  // namespace prc
