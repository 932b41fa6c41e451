#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "volterra/series.hpp"

namespace testing {

using volterra::Complex;
using volterra::TaylorSeries;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240613);
  return gen;
}

inline TaylorSeries random_series(std::size_t degree, double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = {d(rng()), d(rng())};
  return TaylorSeries(std::move(c));
}

inline Complex random_point(double max_radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(max_radius * std::sqrt(u(rng())), 2.0 * M_PI * u(rng()));
}

inline double max_coeff_diff(const TaylorSeries& a, const TaylorSeries& b) {
  double worst = 0.0;
  const std::size_t n = std::max(a.degree(), b.degree());
  for (std::size_t i = 0; i <= n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_coeff(const TaylorSeries& a) {
  double m = 0.0;
  for (Complex c : a.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace testing
