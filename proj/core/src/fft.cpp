#include "volterra/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace volterra::detail {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void inverse_dft_pow2(std::span<std::complex<double>> x) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("inverse_dft_pow2: size must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t k = 0; k < len / 2; ++k) {
      // Twiddles from the angle directly so errors do not accumulate along k.
      const std::complex<double> w = std::polar(1.0, ang * static_cast<double>(k));
      for (std::size_t i = k; i < n; i += len) {
        const auto u = x[i];
        const auto v = x[i + len / 2] * w;
        x[i] = u + v;
        x[i + len / 2] = u - v;
      }
    }
  }
}

}  // namespace volterra::detail
