#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "volterra/criteria.hpp"
#include "volterra/ground_truth.hpp"

namespace volterra {

struct ReportConfig {
  ClassifyConfig classify;
  std::size_t probe_n = 128;
  double upper_t0 = 0.875;  // split point of the integral upper bound
};

struct ReportRow {
  GroundTruthRow expected;
  CriterionReport report;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> probe_exponent;
  bool agree = false;
  std::string diagnostics;
};

struct Report {
  std::vector<ReportRow> rows;
  std::size_t disagreements = 0;
  std::size_t inconclusive = 0;
};

/// Classifies every ground-truth row and attaches the estimation evidence.
Report build_report(const ReportConfig& cfg = {});

/// 0 when every row agrees, 2 when some row is Inconclusive, 1 otherwise.
int report_exit_code(const Report& report);

/// 0 for a decided headline, 2 for Inconclusive.
int classify_exit_code(const CriterionReport& rep);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const CriterionReport& rep, bool include_ladders = true);
nlohmann::json to_json(const Report& report, const ReportConfig& cfg);

inline constexpr const char* kCsvHeader = "symbol,op,alpha,beta,verdict,value,lower,upper,probe_exp,agree";

std::string to_csv(const Report& report);
std::string to_text(const Report& report);
std::string to_csv(const CriterionReport& rep);
std::string to_text(const CriterionReport& rep);

/// Registry listing: symbols with metadata plus the ground-truth rows.
nlohmann::json registry_json();

/// Shortest round-trip decimal form used by every text and CSV emitter.
std::string format_number(double x);

}  // namespace volterra
