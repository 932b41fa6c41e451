#pragma once

#include <optional>
#include <string>
#include <vector>

#include "volterra/criteria.hpp"

namespace volterra {

/// One expected classification with its closed-form justification.
struct GroundTruthRow {
  std::string symbol;
  OperatorKind op = OperatorKind::Tg;
  SpacePair pair;
  std::optional<VerdictTag> boundedness;  // Bounded or Unbounded
  std::optional<VerdictTag> compactness;  // Compact or NotCompact
  std::optional<double> value;
  double tolerance = 0.0;
  bool forwarded = false;
  bool sufficiency_only = false;
  std::string justification;
};

const std::vector<GroundTruthRow>& ground_truth_table();

/// Whether a classification reproduces the row; `why` lists mismatches.
bool matches(const GroundTruthRow& row, const CriterionReport& rep, std::string* why = nullptr);

}  // namespace volterra
