#pragma once

#include <cstddef>
#include <stdexcept>

#include "volterra/series.hpp"

namespace volterra {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Open sector {|z| < radius, |arg(z e^{-i theta})| < eta/2}.
struct SectorParams {
  double eta = 0.0;
  double theta = 0.0;
  double radius = 1.0;

  SectorParams() = default;
  /// Throws std::invalid_argument unless 0 < eta < pi, 0 <= theta < 2 pi and
  /// 0 < radius <= 1.
  SectorParams(double eta, double theta, double radius = 1.0);

  bool contains(Complex z) const;
};

/// Conformal map of the sector onto the disk with psi(e^{i theta}/2) = 0 and
/// psi(0+) = e^{i theta}.
struct SectorMap {
  SectorParams params;
  FunctionHandle psi;
  FunctionHandle dpsi;
  double center = 0.0;           // chain image of radius/2 on the real axis
  double center_residual = 0.0;  // |psi(e^{i theta}/2)|
  Complex vertex_limit{};        // psi(eps e^{i theta}) at eps = 1e-12
  double vertex_residual = 0.0;  // |vertex_limit - e^{i theta}|
};

/// Throws ConstructionError if the normalization misses by more than 1e-10.
SectorMap build_sector_map(const SectorParams& params);

/// |z| |psi'(z)| / (1 - |psi(z)|^2). Throws DomainError outside the sector or
/// at z = 0.
double sector_density_ratio(const SectorMap& map, Complex z);

/// Largest density ratio of the eta-sector map over the first `samples` Halton
/// points of the half-radius sector of aperture gamma around angle theta.
/// Throws std::invalid_argument unless 0 < gamma < eta < pi.
double estimate_C1(double gamma, double eta, std::size_t samples, double theta = 0.0);

/// i-th point (i >= 1) of the Halton(2,3) sample of that sector.
Complex sector_sample(double gamma, double theta, std::size_t i);

}  // namespace volterra
