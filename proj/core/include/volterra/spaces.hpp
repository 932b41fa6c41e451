#pragma once

#include <cstddef>
#include <vector>

#include "volterra/series.hpp"
#include "volterra/symbols.hpp"

namespace volterra {

/// Exponents of the source space H∞_alpha and the target space H∞_beta.
struct SpacePair {
  double alpha = 0.0;
  double beta = 0.0;

  SpacePair() = default;
  /// Throws std::invalid_argument unless alpha, beta >= 0.
  SpacePair(double alpha, double beta);
};

/// Polar sampling grid for suprema over the disk.
///
/// Radial nodes are stored through their gaps s_k = 1 - r_k so that points
/// close to the circle keep full relative precision in the weight.
struct DiskGrid {
  std::vector<double> gaps;  // decreasing, gaps[0] = 1 (the origin)
  std::size_t angles = 512;
  int refine_passes = 3;
  std::size_t refined_rungs = 32;  // outer rungs whose angular maxima are refined
  bool reaches_boundary = true;  // extrapolation allowed only on full grids

  /// r_k = 1 - 2^{-k/4}, k = 0..rungs; M angles. Throws std::invalid_argument
  /// if M < 64, M is not a power of two, or the outer node is below 1 - 1e-6.
  static DiskGrid standard(std::size_t rungs = 96, std::size_t angles = 512, int refine_passes = 3);

  /// Same grading compressed into |z| <= rho < 1 (no boundary extrapolation).
  static DiskGrid restricted(double rho, std::size_t rungs = 48, std::size_t angles = 256);

  std::size_t rungs() const { return gaps.size(); }
  double radius(std::size_t k) const { return 1.0 - gaps[k]; }
  double theta(std::size_t j) const;
};

const DiskGrid& default_grid();

/// Supremum estimate with its diagnostics.
struct SupNorm {
  double value = 0.0;       // reported supremum (extrapolated when applicable)
  double grid_value = 0.0;  // best sampled value, refinement included
  Complex argmax{};
  std::vector<double> rung_gap;  // 1 - r of every radial node that was evaluated
  std::vector<double> rung_max;  // per evaluated node; theta-refined on the outer rungs
  bool extrapolated = false;
  bool clamped = false;    // some sample exceeded the overflow clamp
  bool divergent = false;  // clamped and the outer rung maxima still grow
};

/// (1-|z|^2)^exponent computed from the gap s = 1-|z| as (s(2-s))^exponent.
double disk_weight(double s, double exponent);

/// sup of (1-|z|^2)^exponent |f(z)| over the grid plus refinement. The
/// exponent may be negative.
SupNorm weighted_modulus_sup(const FunctionHandle& f, double exponent, const DiskGrid& grid = default_grid());

/// ||f||_{H∞_alpha}. Throws std::invalid_argument for alpha < 0.
SupNorm weighted_sup_norm(const FunctionHandle& f, double alpha, const DiskGrid& grid = default_grid());

/// |f(0)| + sup (1-|z|^2)|f'(z)|. Throws std::logic_error without f'.
double bloch_norm(const FunctionHandle& f, const DiskGrid& grid = default_grid());

struct BlochSurrogate {
  enum class Status { Ok, ZeroDerivative };
  Status status = Status::Ok;
  double value = 0.0;  // sup (1-|z|^2)|g''/g'|, meaningful when status is Ok
  bool divergent = false;
};

/// Grid surrogate for log(g') in the Bloch space.
BlochSurrogate log_deriv_bloch_seminorm(const SymbolSpec& g, const DiskGrid& grid = default_grid());

}  // namespace volterra
