#include "volterra/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace volterra {

namespace {

GaussRule build_rule(std::size_t n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p2) /
             static_cast<double>(k);
      }
      dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
  static std::mutex mutex;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;  // std::map nodes are stable
}

double gauss_segment(const RadialIntegrand& f, double s_lo, double s_hi, const GaussRule& rule, bool log_sub) {
  double acc = 0.0;
  if (log_sub) {
    const double u_lo = -std::log(s_hi), u_hi = -std::log(s_lo);
    const double mid = 0.5 * (u_lo + u_hi), half = 0.5 * (u_hi - u_lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double s = std::exp(-(mid + half * rule.nodes[i]));
      acc += rule.weights[i] * f(1.0 - s, s) * s;
    }
    return acc * half;
  }
  const double mid = 0.5 * (s_lo + s_hi), half = 0.5 * (s_hi - s_lo);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = mid + half * rule.nodes[i];
    acc += rule.weights[i] * f(1.0 - s, s);
  }
  return acc * half;
}

namespace {

struct Adaptive {
  const RadialIntegrand& f;
  const GaussRule& rule;
  const QuadratureConfig& cfg;
  bool log_sub;
  QuadratureResult result;

  double segment(double lo, double hi) {
    result.evaluations += rule.nodes.size();
    return gauss_segment(f, lo, hi, rule, log_sub);
  }

  // Refines [lo, hi] (in s) given its one-level estimate.
  double refine(double lo, double hi, double whole, int depth) {
    const double mid = log_sub ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    const double left = segment(mid, hi);
    const double right = segment(lo, mid);
    const double two = left + right;
    const double err = std::abs(two - whole);
    if (err <= cfg.rel_tol * std::abs(two) + 1e-300 || depth >= 40) {
      result.error_estimate += err;
      return two;
    }
    if (result.evaluations + 4 * rule.nodes.size() > cfg.max_evaluations) {
      result.converged = false;
      result.error_estimate += err;
      return two;
    }
    return refine(mid, hi, left, depth + 1) + refine(lo, mid, right, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate_radial_gaps(const RadialIntegrand& f, double s0, double s1, const QuadratureConfig& cfg,
                                       bool log_sub) {
  if (!(s0 <= 1.0 && s1 > 0.0 && s1 <= s0)) {
    throw std::invalid_argument("integrate_radial: need 0 <= r0 <= t < 1");
  }
  Adaptive ad{f, gauss_legendre(cfg.nodes), cfg, log_sub, {}};
  double total = 0.0;
  // Dyadic cells in s between s1 and s0.
  double hi = s0;
  while (hi > s1) {
    double lo = std::exp2(std::ceil(std::log2(hi)) - 1.0);
    if (lo >= hi) lo = hi * 0.5;
    lo = std::max(lo, s1);
    total += ad.refine(lo, hi, ad.segment(lo, hi), 0);
    hi = lo;
  }
  ad.result.value = total;
  return ad.result;
}

QuadratureResult integrate_radial(const RadialIntegrand& f, double r0, double t, const QuadratureConfig& cfg,
                                  bool log_sub) {
  if (!(r0 >= 0.0 && r0 <= t && t < 1.0)) throw std::invalid_argument("integrate_radial: need 0 <= r0 <= t < 1");
  return integrate_radial_gaps(f, 1.0 - r0, 1.0 - t, cfg, log_sub);
}

}  // namespace volterra
