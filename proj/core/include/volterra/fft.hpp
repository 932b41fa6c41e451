#pragma once

#include <complex>
#include <span>

namespace volterra::detail {

/// In-place radix-2 transform x_j <- sum_m x_m exp(+2 pi i m j / n).
/// n must be a power of two. Unnormalized.
void inverse_dft_pow2(std::span<std::complex<double>> x);

bool is_power_of_two(std::size_t n);

}  // namespace volterra::detail
