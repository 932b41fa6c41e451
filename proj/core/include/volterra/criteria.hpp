#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "volterra/operators.hpp"
#include "volterra/quadrature.hpp"
#include "volterra/spaces.hpp"
#include "volterra/symbols.hpp"

namespace volterra {

/// A criterion was invoked outside the parameter range where it is claimed.
class HypothesisError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class VerdictTag { Bounded, Unbounded, Compact, NotCompact, Inconclusive };

const char* to_string(VerdictTag tag);

struct Verdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  std::optional<double> value;
  std::vector<std::string> evidence;
  std::string reason;             // why Inconclusive, or qualifying notes
  bool sufficiency_only = false;  // decided by a one-directional criterion
  double slope = 0.0;             // regression slope of the deciding sequence

  bool decided() const { return tag != VerdictTag::Inconclusive; }
};

/// L(t_k) = (1-t_k^2)^beta sup_theta I(t_k, theta) along t_k = 1 - 2^{-k}.
struct RadialLadder {
  std::vector<int> k;
  std::vector<double> t_values;
  std::vector<double> values;
  std::vector<double> argmax_angles;
  std::vector<bool> reliable;
};

struct LadderConfig {
  int k_min = 3;
  int k_max = 40;
  std::size_t angles = 512;
  int golden_iterations = 40;
  QuadratureConfig quad;
};

struct ClassifyConfig {
  LadderConfig ladder;
  DiskGrid grid = DiskGrid::standard();
};

struct LadderResult {
  RadialLadder ladder;
  Verdict verdict;
};

struct TailResult {
  std::vector<int> m;             // outer index t_2 = t_m
  std::vector<double> inner;      // limsup estimate over the last rungs for each m
  Verdict verdict;
};

struct PointwiseResult {
  SupNorm sup;
  Verdict verdict;
};

/// Value of a single radial integral with its reliability diagnostics.
struct RadialValue {
  double value = 0.0;
  std::size_t evaluations = 0;
  bool reliable = true;   // quadrature met its error target
  bool divergent = false; // clamped integrand samples
};

/// Slope rule on a ladder-like sequence (index step = one halving of 1 - t).
Verdict slope_rule(const std::vector<double>& values, const std::vector<bool>& reliable);

/// Compactness rule on a sequence that should tend to 0.
Verdict decay_rule(const std::vector<double>& values);

/// int_0^t |g'(r e^{i theta})| / (1-r^2)^alpha dr.
RadialValue radial_integral(const SymbolSpec& g, double alpha, double theta, double t,
                            const QuadratureConfig& quad = {});

/// int_0^t |g(r e^{i theta})| / (1-r^2)^{alpha+1} dr. Throws HypothesisError
/// unless alpha > 0.
RadialValue sg_radial_integral(const SymbolSpec& g, double alpha, double theta, double t,
                               const QuadratureConfig& quad = {});

LadderResult boundedness_Tg_integral(const SymbolSpec& g, const SpacePair& pair, const LadderConfig& cfg = {});

/// Throws HypothesisError unless alpha > 0.
LadderResult boundedness_Sg_integral(const SymbolSpec& g, const SpacePair& pair, const LadderConfig& cfg = {});

/// sup (1-|z|^2)^{beta+1-alpha}|g'|. Throws HypothesisError for beta = 0.
PointwiseResult pointwise_Tg(const SymbolSpec& g, const SpacePair& pair, const DiskGrid& grid = default_grid());

/// sup (1-|z|^2)^{beta-alpha}|g|. Throws HypothesisError for beta = 0.
PointwiseResult pointwise_Sg(const SymbolSpec& g, const SpacePair& pair, const DiskGrid& grid = default_grid());

TailResult compactness_Tg_tail(const SymbolSpec& g, const SpacePair& pair, const LadderConfig& cfg = {});

/// Boundary limit of the weighted modulus for T_g or S_g. Throws
/// HypothesisError for beta = 0.
PointwiseResult compactness_pointwise(const SymbolSpec& g, const SpacePair& pair, OperatorKind op,
                                      const DiskGrid& grid = default_grid());

/// S_g into H∞_0 is compact exactly for g = 0.
Verdict sg_compact_to_H0(const SymbolSpec& g);

struct FullIntegral {
  double value = 0.0;  // sup_theta int_0^1 |g'|, meaningful when Bounded
  double theta = 0.0;
  Verdict verdict;
};

FullIntegral full_radial_integral(const SymbolSpec& g, const LadderConfig& cfg = {});

struct CriterionEntry {
  std::string criterion;
  Verdict verdict;
  std::optional<RadialLadder> ladder;
  std::vector<double> tail;  // outer tail sequence, when applicable
};

struct CriterionReport {
  std::string symbol;
  OperatorKind op = OperatorKind::Tg;
  SpacePair pair;
  std::vector<CriterionEntry> criteria;
  Verdict boundedness;
  Verdict compactness;
  bool forwarded = false;  // S_g at (0,0) decided through T_g
  bool cross_check_agreement = true;

  /// "Bounded", "Unbounded", "Inconclusive", optionally "+Compact" or
  /// "+NotCompact".
  std::string verdict_string() const;
  /// Headline tag: Inconclusive if boundedness is undecided.
  VerdictTag headline() const { return boundedness.tag; }
};

CriterionReport classify(const SymbolSpec& g, OperatorKind op, const SpacePair& pair,
                         const ClassifyConfig& cfg = {});

}  // namespace volterra
