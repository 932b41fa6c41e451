#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "volterra/criteria.hpp"
#include "volterra/operators.hpp"
#include "volterra/spaces.hpp"
#include "volterra/symbols.hpp"

namespace volterra {

struct BatteryEntry {
  std::string label;
  TaylorSeries f;
  double norm_alpha = 1.0;  // ||f||_{H∞_alpha}
};

/// Test functions for operator-norm lower bounds on H∞_alpha.
struct TestBattery {
  double alpha = 0.0;
  std::vector<BatteryEntry> entries;
};

/// f = 1; normalized monomials z^n (n = 1, 2, 4, ..., 64); for alpha > 0 the
/// family 1/(1 - e^{-2 i theta} z^2)^alpha at 8 angles and the peaking family
/// (1-|lambda|^2)^alpha / (1 - conj(lambda) z)^{2 alpha} at |lambda| = 1 - 2^{-j},
/// j = 1..7, and 8 arguments. Norms of non-monomial entries come from the grid.
TestBattery standard_battery(double alpha, std::size_t degree = kDefaultDegree, const DiskGrid& grid = default_grid());

/// ||z^n||_{H∞_alpha} = r^n (1-r^2)^alpha at r^2 = n/(n + 2 alpha).
double zn_norm(std::size_t n, double alpha);

/// max over |z| <= 1/2 of |z^n| / ||z^n||_alpha.
double weak_null_premise(std::size_t n, double alpha);

/// max over the battery of ||Op f||_beta / ||f||_alpha.
double empirical_lower_bound(const SymbolSpec& g, OperatorKind op, const SpacePair& pair, const TestBattery& battery,
                             const DiskGrid& grid = default_grid());

/// Battery ratios with the target norm restricted to |z| <= rho_j = 1 - 2^{-j}.
struct LowerBoundLadder {
  std::vector<double> radii;
  std::vector<double> values;
};

LowerBoundLadder lower_bound_ladder(const SymbolSpec& g, OperatorKind op, const SpacePair& pair,
                                    const TestBattery& battery, int rungs = 7);

struct UpperBound {
  double m_t0 = 0.0;     // sup over theta and R <= t0 of the weighted radial integral
  double n = 0.0;        // sup over ladder rungs beyond t0
  double sum = 0.0;      // m_t0 + n
  double refined = 0.0;  // max(m_t0, n): the same quantity split without overlap
};

/// Upper bound for ||T_g|| from the radial-integral criterion. t0 must be a
/// rung 1 - 2^{-k} of the ladder. Throws HypothesisError unless the ladder
/// verdict is Bounded.
UpperBound integral_upper_bound(const SymbolSpec& g, const SpacePair& pair, double t0, const LadderConfig& cfg = {});

struct ProbeTrace {
  std::vector<std::size_t> n;
  std::vector<double> values;  // ||Op z^n||_beta / ||z^n||_alpha
  double decay_exponent = 0.0;  // log-log slope over the last half
};

/// Requires n_max >= 16.
ProbeTrace compactness_probe(const SymbolSpec& g, OperatorKind op, const SpacePair& pair, std::size_t n_max = 128,
                             const DiskGrid& grid = default_grid());

}  // namespace volterra
