#include "volterra/sector.hpp"

#include <cmath>
#include <numbers>

namespace volterra {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double halton(std::size_t i, std::size_t base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

// Sector of aperture eta around the positive axis -> disk: the image c, its
// derivative dc and 1 - |c|^2 without cancellation near the boundary.
struct ChainPoint {
  Complex c;
  Complex dc;
  double gap;
};

struct Chain {
  double eta;
  double radius;

  ChainPoint operator()(Complex z) const {
    const double p = kPi / eta;
    const Complex w0 = z / radius;
    const Complex w2 = std::pow(w0, p);                  // right half-disk
    const Complex dw2 = p * std::pow(w0, p - 1.0) / radius;
    const Complex w3 = kI * w2;                          // upper half-disk
    // Joukowski to the upper half-plane, then Cayley to the disk, combined.
    const Complex num = w3 * w3 + 2.0 * kI * w3 + 1.0;
    const Complex den = w3 * w3 - 2.0 * kI * w3 + 1.0;
    const Complex c = num / den;
    const Complex dc = 4.0 * kI * (1.0 - w3 * w3) / (den * den);
    // |den|^2 - |num|^2 = 8 (1 - |w2|^2) Re(w2)
    const double gap = 8.0 * (1.0 - std::norm(w2)) * w2.real() / std::norm(den);
    return {c, dc * kI * dw2, gap};
  }
};

}  // namespace

SectorParams::SectorParams(double e, double t, double r) : eta(e), theta(t), radius(r) {
  if (!(e > 0.0 && e < kPi)) throw std::invalid_argument("SectorParams: need 0 < eta < pi");
  if (!(t >= 0.0 && t < 2.0 * kPi)) throw std::invalid_argument("SectorParams: need 0 <= theta < 2 pi");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("SectorParams: need 0 < radius <= 1");
}

bool SectorParams::contains(Complex z) const {
  if (z == Complex{} || std::abs(z) >= radius) return false;
  return std::abs(std::arg(z * std::polar(1.0, -theta))) < 0.5 * eta;
}

SectorMap build_sector_map(const SectorParams& params) {
  const Chain chain{params.eta, params.radius};
  const double a = chain(Complex(0.5, 0.0)).c.real();
  const Complex lambda = std::polar(1.0, params.theta);
  const Complex unrotate = std::polar(1.0, -params.theta);

  auto value = [=](Complex z) {
    const Complex c = chain(z * unrotate).c;
    return lambda * (c - a) / (1.0 - a * c);
  };
  auto first = [=](Complex z) {
    const ChainPoint pt = chain(z * unrotate);
    const Complex d = 1.0 - a * pt.c;
    return lambda * (1.0 - a * a) / (d * d) * pt.dc * unrotate;
  };

  SectorMap map{params, FunctionHandle::from_closed_form(ClosedForm{value, first, {}}, params.radius),
                FunctionHandle::from_closed_form(ClosedForm{first, {}, {}}, params.radius)};
  map.center = a;
  map.center_residual = std::abs(value(std::polar(0.5, params.theta)));
  map.vertex_limit = value(std::polar(1e-12, params.theta));
  map.vertex_residual = std::abs(map.vertex_limit - lambda);
  if (!(map.center_residual <= 1e-10) || !(map.vertex_residual <= 1e-10)) {
    throw ConstructionError("build_sector_map: normalization residual above 1e-10");
  }
  return map;
}

double sector_density_ratio(const SectorMap& map, Complex z) {
  if (!map.params.contains(z)) throw DomainError("sector_density_ratio: point outside the open sector");
  // psi = lambda (c - a) / (1 - a c), so 1 - |psi|^2 = (1 - a^2)(1 - |c|^2) / |1 - a c|^2.
  const Chain chain{map.params.eta, map.params.radius};
  const ChainPoint pt = chain(z * std::polar(1.0, -map.params.theta));
  const double a = map.center;
  const Complex dw = map.psi.closed_form()->first(z);
  return std::abs(z) * std::abs(dw) * std::norm(1.0 - a * pt.c) / ((1.0 - a * a) * pt.gap);
}

Complex sector_sample(double gamma, double theta, std::size_t i) {
  const double rho = 0.5 * halton(i, 2);
  const double phi = theta - 0.5 * gamma + gamma * halton(i, 3);
  return std::polar(rho, phi);
}

double estimate_C1(double gamma, double eta, std::size_t samples, double theta) {
  if (!(gamma > 0.0 && gamma < eta && eta < kPi)) {
    throw std::invalid_argument("estimate_C1: need 0 < gamma < eta < pi");
  }
  const SectorMap map = build_sector_map(SectorParams(eta, theta));
  double best = 0.0;
  for (std::size_t i = 1; i <= samples; ++i) {
    const Complex z = sector_sample(gamma, theta, i);
    if (z == Complex{}) continue;
    best = std::max(best, sector_density_ratio(map, z));
  }
  return best;
}

}  // namespace volterra
