#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace volterra {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule; cached per n. Throws std::invalid_argument
/// for n == 0.
const GaussRule& gauss_legendre(std::size_t n);

struct QuadratureConfig {
  std::size_t nodes = 16;               // per cell
  double rel_tol = 1e-6;
  std::size_t max_evaluations = 10000;  // per integral
};

/// Integrand of the radial variable, given both r and its gap s = 1 - r so
/// that weights near r = 1 keep their relative precision.
using RadialIntegrand = std::function<double(double r, double s)>;

/// Plain composite rule on r in [1 - s_hi, 1 - s_lo]. With log_sub the rule is
/// applied in u = -log s, which flattens (1-r)^{-a} endpoint behavior.
double gauss_segment(const RadialIntegrand& f, double s_lo, double s_hi, const GaussRule& rule, bool log_sub);

/// The substitution is used for weight exponents alpha >= 1/2.
inline bool use_log_substitution(double alpha) { return alpha >= 0.5; }

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// int_{r0}^{t} f dr on dyadic cells [1-2^{-j}, 1-2^{-j-1}] clipped to the
/// interval, each refined by interval halving until the two-level estimates
/// agree to rel_tol. Requires 0 <= r0 <= t < 1. Reports converged = false
/// when the evaluation budget runs out.
QuadratureResult integrate_radial(const RadialIntegrand& f, double r0, double t, const QuadratureConfig& cfg,
                                  bool log_sub);

/// Same, with the lower limit given by its gap (s0 = 1 - r0) and the upper by
/// s1 = 1 - t, for intervals too close to the circle to be written in r.
QuadratureResult integrate_radial_gaps(const RadialIntegrand& f, double s0, double s1, const QuadratureConfig& cfg,
                                       bool log_sub);

}  // namespace volterra
