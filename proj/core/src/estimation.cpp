#include "volterra/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ladder.hpp"
#include "volterra/optimize.hpp"
#include "volterra/parallel.hpp"

namespace volterra {

namespace {

// Coefficients of (1 - w)^{-a} up to w^m.
std::vector<double> binomial_series(double a, std::size_t m) {
  std::vector<double> c(m + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= m; ++k) c[k] = c[k - 1] * (a + static_cast<double>(k) - 1.0) / static_cast<double>(k);
  return c;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

double target_norm(const TaylorSeries& y, double beta, const DiskGrid& grid) {
  return weighted_sup_norm(FunctionHandle::from_series(y), beta, grid).value;
}

}  // namespace

double zn_norm(std::size_t n, double alpha) {
  if (alpha == 0.0 || n == 0) return 1.0;
  const double nn = static_cast<double>(n);
  const double r2 = nn / (nn + 2.0 * alpha);
  return std::pow(r2, 0.5 * nn) * std::pow(1.0 - r2, alpha);
}

double weak_null_premise(std::size_t n, double alpha) {
  return std::pow(0.5, static_cast<double>(n)) / zn_norm(n, alpha);
}

TestBattery standard_battery(double alpha, std::size_t degree, const DiskGrid& grid) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("standard_battery: alpha must be >= 0");
  TestBattery b;
  b.alpha = alpha;
  b.entries.push_back({"one", TaylorSeries::constant(1.0), 1.0});
  for (std::size_t n = 1; n <= 64 && n <= degree; n *= 2) {
    b.entries.push_back({"z^" + std::to_string(n), TaylorSeries::monomial(n), zn_norm(n, alpha)});
  }
  if (alpha == 0.0) return b;

  std::vector<BatteryEntry> extra;
  const auto kernel = binomial_series(alpha, degree / 2);
  for (int j = 0; j < 8; ++j) {
    const double th = std::numbers::pi * j / 8.0;
    std::vector<Complex> c(degree + 1);
    for (std::size_t m = 0; 2 * m <= degree; ++m) c[2 * m] = kernel[m] * std::polar(1.0, -2.0 * th * static_cast<double>(m));
    extra.push_back({"kernel@" + fixed(th), TaylorSeries(std::move(c)), 0.0});
  }
  const auto peak = binomial_series(2.0 * alpha, degree);
  for (int j = 1; j <= 7; ++j) {
    const double rho = 1.0 - std::exp2(-j);
    const double scale = std::pow(1.0 - rho * rho, alpha);
    for (int l = 0; l < 8; ++l) {
      const double phi = 2.0 * std::numbers::pi * l / 8.0;
      const Complex lam_bar = std::polar(rho, -phi);
      std::vector<Complex> c(degree + 1);
      Complex p = scale;
      for (std::size_t m = 0; m <= degree; ++m) {
        c[m] = peak[m] * p;
        p *= lam_bar;
      }
      extra.push_back({"peak@" + fixed(rho) + "," + fixed(phi), TaylorSeries(std::move(c)), 0.0});
    }
  }
  parallel_for(extra.size(), [&](std::size_t i) {
    extra[i].norm_alpha = weighted_sup_norm(FunctionHandle::from_series(extra[i].f), alpha, grid).value;
  });
  b.entries.insert(b.entries.end(), extra.begin(), extra.end());
  return b;
}

double empirical_lower_bound(const SymbolSpec& g, OperatorKind op, const SpacePair& pair, const TestBattery& battery,
                             const DiskGrid& grid) {
  if (battery.entries.empty()) throw std::invalid_argument("empirical_lower_bound: empty battery");
  const TaylorSeries gs = g.taylor(kDefaultDegree);
  std::vector<double> ratio(battery.entries.size());
  parallel_for(ratio.size(), [&](std::size_t i) {
    const auto& e = battery.entries[i];
    ratio[i] = target_norm(apply(op, gs, e.f), pair.beta, grid) / e.norm_alpha;
  });
  return *std::max_element(ratio.begin(), ratio.end());
}

LowerBoundLadder lower_bound_ladder(const SymbolSpec& g, OperatorKind op, const SpacePair& pair,
                                    const TestBattery& battery, int rungs) {
  if (battery.entries.empty()) throw std::invalid_argument("lower_bound_ladder: empty battery");
  const TaylorSeries gs = g.taylor(kDefaultDegree);
  std::vector<TaylorSeries> images;
  images.reserve(battery.entries.size());
  for (const auto& e : battery.entries) images.push_back(apply(op, gs, e.f));

  LowerBoundLadder out;
  for (int j = 1; j <= rungs; ++j) {
    const double rho = 1.0 - std::exp2(-j);
    const DiskGrid grid = DiskGrid::restricted(rho);
    std::vector<double> ratio(images.size());
    parallel_for(images.size(), [&](std::size_t i) {
      ratio[i] = target_norm(images[i], pair.beta, grid) / battery.entries[i].norm_alpha;
    });
    out.radii.push_back(rho);
    out.values.push_back(*std::max_element(ratio.begin(), ratio.end()));
  }
  return out;
}

UpperBound integral_upper_bound(const SymbolSpec& g, const SpacePair& pair, double t0, const LadderConfig& cfg) {
  using namespace detail;
  const Build b = build_ladder([f = g.first](Complex z) { return std::abs(f(z)); }, pair.alpha, pair.beta, cfg);
  const Verdict v = ladder_verdict(b.ladder, g.metadata.log_deriv_bloch, "tg_integral", "log(g') in the Bloch space");
  if (v.tag != VerdictTag::Bounded) throw HypothesisError("integral_upper_bound: the ladder is not bounded");

  int k0 = -1;
  for (std::size_t i = 0; i < b.ladder.t_values.size(); ++i) {
    if (std::abs(b.ladder.t_values[i] - t0) <= 1e-15) k0 = b.ladder.k[i];
  }
  if (k0 < 0) throw std::invalid_argument("integral_upper_bound: t0 must be a ladder rung 1 - 2^{-k}");

  const Sweep& sw = b.sweep;
  std::vector<double> best(sw.angles.size(), 0.0);
  parallel_for(sw.angles.size(), [&](std::size_t a) {
    bool hit = false;
    const auto f = sw.integrand(sw.angles[a], hit);
    double acc = 0.0, m = 0.0;
    for (int j = 0; j < k0; ++j) {
      const double hi = cell_hi(j), lo = cell_lo(j);
      const auto inside = [&](double s) {
        return weight_power(s, pair.beta) * (acc + gauss_segment(f, s, hi, *sw.rule, sw.log_sub));
      };
      m = std::max(m, golden_max(inside, lo, hi, cfg.golden_iterations).value);
      acc += sw.c[a][static_cast<std::size_t>(j)];
      m = std::max(m, weight_power(lo, pair.beta) * acc);
    }
    best[a] = m;
  });

  UpperBound out;
  out.m_t0 = *std::max_element(best.begin(), best.end());
  for (std::size_t i = 0; i < b.ladder.k.size(); ++i) {
    if (b.ladder.k[i] > k0) out.n = std::max(out.n, b.ladder.values[i]);
  }
  out.sum = out.m_t0 + out.n;
  out.refined = std::max(out.m_t0, out.n);
  return out;
}

ProbeTrace compactness_probe(const SymbolSpec& g, OperatorKind op, const SpacePair& pair, std::size_t n_max,
                             const DiskGrid& grid) {
  if (n_max < 16) throw std::invalid_argument("compactness_probe: n_max must be >= 16");
  const TaylorSeries gs = g.taylor(kDefaultDegree);
  ProbeTrace tr;
  tr.values.resize(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) tr.n.push_back(n);
  parallel_for(n_max, [&](std::size_t i) {
    const std::size_t n = i + 1;
    tr.values[i] = target_norm(apply(op, gs, TaylorSeries::monomial(n)), pair.beta, grid) / zn_norm(n, pair.alpha);
  });

  std::vector<double> x, y;
  for (std::size_t i = n_max / 2 - 1; i < n_max; ++i) {
    if (tr.values[i] > 0.0) {
      x.push_back(std::log(static_cast<double>(tr.n[i])));
      y.push_back(std::log(tr.values[i]));
    }
  }
  tr.decay_exponent = x.size() >= 2 ? detail::regression_slope(x, y) : 0.0;
  return tr;
}

}  // namespace volterra
