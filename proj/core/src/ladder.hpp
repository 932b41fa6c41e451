#pragma once

// Shared radial-ladder machinery for the criteria and estimation modules.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "volterra/criteria.hpp"
#include "volterra/optimize.hpp"
#include "volterra/parallel.hpp"
#include "volterra/quadrature.hpp"

namespace volterra::detail {

constexpr double kDivergenceThreshold = 1e8;
constexpr double kGrowthSlope = 0.02;
constexpr double kFlatSlope = 1e-3;
constexpr std::size_t kWindow = 8;
constexpr double kCompactTol = 1e-3;
constexpr double kNotCompactTol = 1e-2;
constexpr double kVerifyTol = 1e-6;
constexpr int kFullIntegralCells = 52;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double regression_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

// Slope of log(values) against the index over the positive entries.
inline double log_slope(const std::vector<double>& values, const std::vector<std::size_t>& idx) {
  std::vector<double> x, y;
  for (std::size_t i : idx) {
    if (values[i] > 0.0) {
      x.push_back(static_cast<double>(i));
      y.push_back(std::log(values[i]));
    }
  }
  return x.size() >= 2 ? regression_slope(x, y) : 0.0;
}

inline double weight_power(double s, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(s * (2.0 - s), exponent);
}

inline double cell_lo(int j) { return std::exp2(-static_cast<double>(j + 1)); }
inline double cell_hi(int j) { return std::exp2(-static_cast<double>(j)); }

using Modulus = std::function<double(Complex)>;

// Cell integrals c_j(theta) = int over r in [1-2^{-j}, 1-2^{-j-1}] for a set of
// angles; prefix sums give I(t_k, theta) for every rung at once.
struct Sweep {
  Modulus modulus;
  double exponent = 0.0;  // the integrand carries (1-r^2)^{-exponent}
  bool log_sub = false;
  const GaussRule* rule = nullptr;
  int cells = 0;
  std::vector<double> angles;
  std::vector<std::vector<double>> c;
  std::vector<char> clamped;

  RadialIntegrand integrand(double theta, bool& hit) const {
    return [this, theta, &hit](double r, double s) {
      double v = modulus(std::polar(r, theta));
      if (!std::isfinite(v) || v > kOverflowClamp) {
        hit = true;
        v = kOverflowClamp;
      }
      v *= weight_power(s, -exponent);
      if (!std::isfinite(v) || v > kOverflowClamp) {
        hit = true;
        v = kOverflowClamp;
      }
      return v;
    };
  }

  std::vector<double> row(double theta, bool& hit) const {
    std::vector<double> out(static_cast<std::size_t>(cells));
    const auto f = integrand(theta, hit);
    for (int j = 0; j < cells; ++j) out[static_cast<std::size_t>(j)] = gauss_segment(f, cell_lo(j), cell_hi(j), *rule, log_sub);
    return out;
  }

  double partial(double theta, int k) const {
    bool hit = false;
    const auto f = integrand(theta, hit);
    double acc = 0.0;
    for (int j = 0; j < k; ++j) acc += gauss_segment(f, cell_lo(j), cell_hi(j), *rule, log_sub);
    return acc;
  }

  double prefix(std::size_t a, int k) const {
    const auto& r = c[a];
    return std::accumulate(r.begin(), r.begin() + k, 0.0);
  }

  void add_angles(const std::vector<double>& extra) {
    const std::size_t base = angles.size();
    angles.insert(angles.end(), extra.begin(), extra.end());
    c.resize(angles.size());
    clamped.resize(angles.size(), 0);
    parallel_for(extra.size(), [&](std::size_t i) {
      bool hit = false;
      c[base + i] = row(angles[base + i], hit);
      clamped[base + i] = hit;
    });
  }
};

inline Sweep make_sweep(Modulus modulus, double exponent, const LadderConfig& cfg) {
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min || cfg.k_max > kFullIntegralCells) {
    throw std::invalid_argument("LadderConfig: need 1 <= k_min <= k_max <= 52");
  }
  if (cfg.angles < 8) throw std::invalid_argument("LadderConfig: need at least 8 angles");
  Sweep sw;
  sw.modulus = std::move(modulus);
  sw.exponent = exponent;
  sw.log_sub = use_log_substitution(exponent);
  sw.rule = &gauss_legendre(cfg.quad.nodes);
  sw.cells = cfg.k_max;
  std::vector<double> base(cfg.angles);
  for (std::size_t i = 0; i < cfg.angles; ++i) base[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(cfg.angles);
  sw.add_angles(base);
  return sw;
}

inline std::vector<std::size_t> circular_top_maxima(const std::vector<double>& v, std::size_t count) {
  const std::size_t m = v.size();
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m; ++j) {
    if (v[j] >= v[(j + m - 1) % m] && v[j] >= v[(j + 1) % m]) idx.push_back(j);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (idx.size() > count) idx.resize(count);
  return idx;
}

// Golden-section depth: at least the configured count, and deep enough that
// the angular bracket resolves features of width 1 - t_k.
inline int golden_depth(int minimum, double width, int k) {
  const double target = 1e-3 * std::exp2(-static_cast<double>(k));
  const double need = std::log(width / target) / std::log(1.0 / 0.6180339887498949);
  return std::max(minimum, static_cast<int>(std::ceil(need)));
}

struct Build {
  Sweep sweep;
  RadialLadder ladder;
  double beta = 0.0;
  LadderConfig cfg;
};

inline Build build_ladder(Modulus modulus, double exponent, double beta, const LadderConfig& cfg) {
  Build b{make_sweep(std::move(modulus), exponent, cfg), {}, beta, cfg};
  Sweep& sw = b.sweep;
  const std::size_t m = cfg.angles;
  const double h = kTwoPi / static_cast<double>(m);
  const int rungs = cfg.k_max - cfg.k_min + 1;

  // Angular refinement per rung around the strongest base-grid maxima.
  std::vector<std::vector<double>> refined(static_cast<std::size_t>(rungs));
  parallel_for(static_cast<std::size_t>(rungs), [&](std::size_t i) {
    const int k = cfg.k_min + static_cast<int>(i);
    std::vector<double> profile(m);
    for (std::size_t a = 0; a < m; ++a) profile[a] = sw.prefix(a, k);
    const int depth = golden_depth(cfg.golden_iterations, 2.0 * h, k);
    for (std::size_t a : circular_top_maxima(profile, 3)) {
      if (profile[a] <= 0.0) continue;
      const double t0 = sw.angles[a];
      const auto best = golden_max([&](double th) { return sw.partial(th, k); }, t0 - h, t0 + h, depth);
      refined[i].push_back(best.x);
    }
  });
  std::vector<double> extra;
  for (auto& r : refined) extra.insert(extra.end(), r.begin(), r.end());
  sw.add_angles(extra);

  RadialLadder& L = b.ladder;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    double best = -1.0, arg = 0.0;
    for (std::size_t a = 0; a < sw.angles.size(); ++a) {
      const double v = sw.prefix(a, k);
      if (v > best) {
        best = v;
        arg = sw.angles[a];
      }
    }
    const double s = std::exp2(-static_cast<double>(k));
    L.k.push_back(k);
    L.t_values.push_back(1.0 - s);
    L.values.push_back(weight_power(s, beta) * best);
    const double wrapped = std::fmod(arg, kTwoPi);
    L.argmax_angles.push_back(wrapped < 0.0 ? wrapped + kTwoPi : wrapped);
  }

  // Independent adaptive check of every rung at its arg-max angle.
  std::vector<char> ok(static_cast<std::size_t>(rungs), 1);
  parallel_for(static_cast<std::size_t>(rungs), [&](std::size_t i) {
    const int k = cfg.k_min + static_cast<int>(i);
    const double s = std::exp2(-static_cast<double>(k));
    const double ws = weight_power(s, beta);
    const double plain = ws > 0.0 ? L.values[i] / ws : 0.0;
    bool hit = false;
    const auto q = integrate_radial_gaps(sw.integrand(L.argmax_angles[i], hit), 1.0, s, cfg.quad, sw.log_sub);
    const double scale = std::max(std::abs(q.value), std::abs(plain));
    const bool match = std::abs(q.value - plain) <= kVerifyTol * scale + 1e-300;
    ok[i] = q.converged && match && !hit;
  });
  for (char c : ok) L.reliable.push_back(c != 0);
  return b;
}


inline Verdict ladder_verdict(const RadialLadder& L, Tristate hypothesis, const std::string& name,
                       const std::string& hypothesis_text) {
  Verdict v = slope_rule(L.values, L.reliable);
  v.evidence = {name};
  if (hypothesis != Tristate::True) {
    if (v.tag == VerdictTag::Bounded) {
      v.sufficiency_only = true;
      v.reason = "sufficient condition only: " + hypothesis_text + " not established";
    } else if (v.tag == VerdictTag::Unbounded) {
      v.tag = VerdictTag::Inconclusive;
      v.value.reset();
      v.reason = "hypothesis failure: ladder diverges but " + hypothesis_text + " is not established";
    }
  }
  return v;
}

}  // namespace volterra::detail
