#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "volterra/report.hpp"

namespace volterra::cli {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s);

struct RunConfig {
  std::string command;
  std::string symbol;
  std::string op = "Tg";
  double alpha = 0.0;
  double beta = 0.0;
  int k_max = 40;
  std::size_t angles = 512;
  std::size_t quad_nodes = 16;
  std::size_t degree = kDefaultDegree;
  Format format = Format::Text;
  std::string out;

  // probe
  std::size_t n_max = 128;
  // norm
  bool derivative = false;
  // sector constant
  double gamma = 0.0;
  double eta = 0.0;
  double theta = 0.0;
  std::vector<std::size_t> samples{1000, 10000, 100000};

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
  ClassifyConfig classify_config() const;
};

/// Exit codes shared by every command.
inline constexpr int kExitDecided = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_report(const RunConfig& cfg, std::ostream& out);
int cmd_norm(const RunConfig& cfg, std::ostream& out);
int cmd_opnorm(const RunConfig& cfg, std::ostream& out);
int cmd_probe(const RunConfig& cfg, std::ostream& out);
int cmd_sector(const RunConfig& cfg, std::ostream& out);
int cmd_list(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command. Errors are reported on `err` with exit 1.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace volterra::cli
