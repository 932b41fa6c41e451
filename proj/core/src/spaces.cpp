#include "volterra/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "volterra/fft.hpp"
#include "volterra/optimize.hpp"
#include "volterra/parallel.hpp"

namespace volterra {

SpacePair::SpacePair(double a, double b) : alpha(a), beta(b) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw std::invalid_argument("SpacePair: alpha and beta must be >= 0");
}

DiskGrid DiskGrid::standard(std::size_t rungs, std::size_t angles, int refine_passes) {
  if (angles < 64 || !detail::is_power_of_two(angles)) {
    throw std::invalid_argument("DiskGrid: angle count must be a power of two >= 64");
  }
  DiskGrid g;
  g.angles = angles;
  g.refine_passes = refine_passes;
  g.gaps.resize(rungs + 1);
  for (std::size_t k = 0; k <= rungs; ++k) g.gaps[k] = std::exp2(-static_cast<double>(k) / 4.0);
  if (g.gaps.back() > 1e-6) throw std::invalid_argument("DiskGrid: outer node must reach 1 - 1e-6");
  return g;
}

DiskGrid DiskGrid::restricted(double rho, std::size_t rungs, std::size_t angles) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("DiskGrid: restricted radius must lie in (0, 1)");
  if (angles < 64 || !detail::is_power_of_two(angles)) {
    throw std::invalid_argument("DiskGrid: angle count must be a power of two >= 64");
  }
  DiskGrid g;
  g.angles = angles;
  g.reaches_boundary = false;
  g.gaps.resize(rungs + 1);
  for (std::size_t k = 0; k <= rungs; ++k) {
    g.gaps[k] = (1.0 - rho) + rho * std::exp2(-static_cast<double>(k) / 4.0);
  }
  g.gaps.back() = 1.0 - rho;
  return g;
}

double DiskGrid::theta(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
}

const DiskGrid& default_grid() {
  static const DiskGrid grid = DiskGrid::standard();
  return grid;
}

double disk_weight(double s, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(s * (2.0 - s), exponent);
}

namespace {

double clamped_modulus(Complex v, bool& clamped) {
  const Sample smp = clamp_sample(v);
  if (smp.divergent) {
    clamped = true;
    return kOverflowClamp;
  }
  return std::abs(smp.value);
}

// |f((1-s) e^{2 pi i j / M})| for j < M.
std::vector<double> rung_moduli(const FunctionHandle& f, double s, std::size_t m, bool& clamped) {
  const double r = 1.0 - s;
  std::vector<double> out(m);
  if (const auto* series = f.series()) {
    std::vector<Complex> folded(m);
    double rn = 1.0;
    for (std::size_t n = 0; n <= series->degree(); ++n) {
      folded[n % m] += (*series)[n] * rn;
      rn *= r;
    }
    detail::inverse_dft_pow2(folded);
    for (std::size_t j = 0; j < m; ++j) out[j] = clamped_modulus(folded[j], clamped);
    return out;
  }
  const auto& fn = f.closed_form()->value;
  for (std::size_t j = 0; j < m; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    out[j] = clamped_modulus(fn(std::polar(r, th)), clamped);
  }
  return out;
}

double point_modulus(const FunctionHandle& f, double theta, double s, bool& clamped) {
  const Complex z = std::polar(1.0 - s, theta);
  if (const auto* series = f.series()) return clamped_modulus((*series)(z), clamped);
  return clamped_modulus(f.closed_form()->value(z), clamped);
}

// Indices of the `count` largest circular local maxima, ties broken by index.
std::vector<std::size_t> top_local_maxima(const std::vector<double>& v, std::size_t count) {
  const std::size_t m = v.size();
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m; ++j) {
    if (v[j] >= v[(j + m - 1) % m] && v[j] >= v[(j + 1) % m]) idx.push_back(j);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (idx.size() > count) idx.resize(count);
  return idx;
}

constexpr std::size_t kOuterRefinedRungs = 8;
constexpr std::size_t kRefinedMaxima = 3;
constexpr int kGoldenIterations = 40;
constexpr int kMaxRefinePasses = 64;

}  // namespace

SupNorm weighted_modulus_sup(const FunctionHandle& f, double exponent, const DiskGrid& grid) {
  const std::size_t m = grid.angles;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(m);

  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < grid.rungs(); ++k) {
    if (grid.radius(k) < f.domain_radius()) live.push_back(k);
  }

  std::vector<std::vector<double>> profile(live.size());
  std::vector<char> rung_clamped(live.size(), 0);
  parallel_for(live.size(), [&](std::size_t i) {
    const double s = grid.gaps[live[i]];
    bool c = false;
    auto v = rung_moduli(f, s, m, c);
    const double w = disk_weight(s, exponent);
    for (auto& x : v) x *= w;
    profile[i] = std::move(v);
    rung_clamped[i] = c;
  });

  SupNorm out;
  out.clamped = std::any_of(rung_clamped.begin(), rung_clamped.end(), [](char c) { return c != 0; });
  out.rung_gap.resize(live.size());
  out.rung_max.resize(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    out.rung_gap[i] = grid.gaps[live[i]];
    const auto it = std::max_element(profile[i].begin(), profile[i].end());
    out.rung_max[i] = *it;
    if (*it > out.grid_value) {
      out.grid_value = *it;
      out.argmax = std::polar(1.0 - out.rung_gap[i], grid.theta(static_cast<std::size_t>(it - profile[i].begin())));
    }
  }
  if (live.empty()) return out;

  bool clamped = false;
  auto modulus = [&](double theta, double s) { return disk_weight(s, exponent) * point_modulus(f, theta, s, clamped); };
  auto consider = [&](double theta, double s, double v) {
    if (v > out.grid_value) {
      out.grid_value = v;
      out.argmax = std::polar(1.0 - s, theta);
    }
  };

  // Angular refinement on the outer rungs.
  const std::size_t refined = std::max(grid.refined_rungs, kOuterRefinedRungs);
  const std::size_t first_outer = live.size() > refined ? live.size() - refined : 0;
  for (std::size_t i = first_outer; i < live.size(); ++i) {
    const double s = out.rung_gap[i];
    for (std::size_t j : top_local_maxima(profile[i], kRefinedMaxima)) {
      const double t0 = grid.theta(j);
      const auto best = golden_max([&](double th) { return modulus(th, s); }, t0 - h, t0 + h, kGoldenIterations);
      out.rung_max[i] = std::max(out.rung_max[i], best.value);
      consider(best.x, s, best.value);
    }
  }

  // Joint (theta, r) refinement of the strongest rungs, for interior maxima.
  std::vector<std::pair<std::size_t, std::size_t>> seeds;  // (rung, angle)
  for (std::size_t i = 0; i < live.size(); ++i) {
    const auto top = top_local_maxima(profile[i], 1);
    if (!top.empty()) seeds.emplace_back(i, top.front());
  }
  std::stable_sort(seeds.begin(), seeds.end(), [&](const auto& a, const auto& b) {
    return profile[a.first][a.second] > profile[b.first][b.second];
  });
  if (seeds.size() > kRefinedMaxima) seeds.resize(kRefinedMaxima);
  for (const auto& [i, j] : seeds) {
    const double s_hi = out.rung_gap[i == 0 ? 0 : i - 1];
    const double s_lo = out.rung_gap[std::min(i + 1, live.size() - 1)];
    double theta = grid.theta(j);
    double s = out.rung_gap[i];
    // Coordinate ascent: at least refine_passes sweeps, then until the value
    // stalls at rounding level.
    double width = h;
    double last = 0.0;
    for (int pass = 0; pass < kMaxRefinePasses; ++pass) {
      const auto bt = golden_max([&](double th) { return modulus(th, s); }, theta - width, theta + width,
                                 kGoldenIterations);
      const double moved = std::abs(bt.x - theta);
      theta = bt.x;
      double v = bt.value;
      consider(theta, s, v);
      if (s_hi > s_lo) {
        const auto bs = golden_max([&](double x) { return modulus(theta, x); }, s_lo, s_hi, kGoldenIterations);
        s = bs.x;
        v = bs.value;
        consider(theta, s, v);
      }
      width = std::max(0.5 * width, 4.0 * moved);
      if (pass + 1 >= std::max(grid.refine_passes, 1) && v <= last * (1.0 + 1e-15)) break;
      last = v;
    }
  }
  out.clamped = out.clamped || clamped;
  out.value = out.grid_value;

  const auto& rm = out.rung_max;
  const std::size_t n = rm.size();
  if (out.clamped && n >= kOuterRefinedRungs) {
    bool growing = true;
    // A saturated rung counts as growth: its true maximum exceeds the clamp.
    for (std::size_t i = n - kOuterRefinedRungs + 1; i < n; ++i) {
      growing = growing && (rung_clamped[i] != 0 || rm[i] > rm[i - 1]);
    }
    out.divergent = growing;
  }

  // Aitken limit of rung maxima that converge geometrically toward the circle.
  if (grid.reaches_boundary && !out.clamped && n >= 9) {
    const double a = rm[n - 9], b = rm[n - 5], c = rm[n - 1];
    const double d1 = b - a, d2 = c - b;
    if (d1 > 0.0 && d2 > 0.0 && d2 / d1 < 0.9) {
      const double q = d2 / d1;
      const double limit = c + d2 * q / (1.0 - q);
      if (limit > out.value) {
        out.value = limit;
        out.extrapolated = true;
      }
    }
  }
  return out;
}

SupNorm weighted_sup_norm(const FunctionHandle& f, double alpha, const DiskGrid& grid) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("weighted_sup_norm: alpha must be >= 0");
  return weighted_modulus_sup(f, alpha, grid);
}

double bloch_norm(const FunctionHandle& f, const DiskGrid& grid) {
  const FunctionHandle df = f.derivative();
  return std::abs(eval(f, 0.0).value) + weighted_sup_norm(df, 1.0, grid).value;
}

BlochSurrogate log_deriv_bloch_seminorm(const SymbolSpec& g, const DiskGrid& grid) {
  BlochSurrogate out;
  for (std::size_t k = 0; k < grid.rungs(); ++k) {
    const std::size_t m = k == 0 ? 1 : grid.angles;
    for (std::size_t j = 0; j < m; ++j) {
      if (std::abs(g.first(std::polar(grid.radius(k), grid.theta(j)))) < 1e-12) {
        out.status = BlochSurrogate::Status::ZeroDerivative;
        return out;
      }
    }
  }
  const auto first = g.first;
  const auto second = g.second;
  const auto quotient = FunctionHandle::from_closed_form(
      ClosedForm{[first, second](Complex z) { return second(z) / first(z); }, {}, {}});
  const SupNorm sup = weighted_sup_norm(quotient, 1.0, grid);
  out.value = sup.value;
  out.divergent = sup.divergent;
  return out;
}

}  // namespace volterra
