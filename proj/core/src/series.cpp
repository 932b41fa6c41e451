#include "volterra/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace volterra {

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs, bool truncated)
    : coeffs_(std::move(coeffs)), truncated_(truncated) {
  if (coeffs_.empty()) coeffs_.emplace_back();
}

TaylorSeries TaylorSeries::monomial(std::size_t n, Complex c) {
  std::vector<Complex> coeffs(n + 1);
  coeffs[n] = c;
  return TaylorSeries(std::move(coeffs));
}

Complex TaylorSeries::operator()(Complex z) const {
  Complex acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

TaylorSeries TaylorSeries::resized(std::size_t degree) const {
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), degree + 1));
  c.resize(degree + 1);
  return TaylorSeries(std::move(c), truncated_);
}

TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] + b[n];
  return TaylorSeries(std::move(c), a.truncated_ || b.truncated_);
}

TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) {
  return a + Complex(-1.0) * b;
}

TaylorSeries operator*(Complex c, const TaylorSeries& a) {
  std::vector<Complex> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return TaylorSeries(std::move(out), a.truncated_);
}

TaylorSeries derivative(const TaylorSeries& f) {
  if (f.degree() == 0) return TaylorSeries();
  std::vector<Complex> c(f.degree());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = static_cast<double>(n + 1) * f[n + 1];
  return TaylorSeries(std::move(c), f.truncated());
}

TaylorSeries antiderivative(const TaylorSeries& f) {
  std::vector<Complex> c(f.degree() + 2);
  for (std::size_t n = 1; n < c.size(); ++n) c[n] = f[n - 1] / static_cast<double>(n);
  return TaylorSeries(std::move(c), f.truncated());
}

TaylorSeries cauchy_product(const TaylorSeries& f, const TaylorSeries& g, std::size_t out_degree) {
  const std::size_t full = f.degree() + g.degree();
  if (out_degree > full) {
    throw std::invalid_argument("cauchy_product: output degree exceeds deg f + deg g");
  }
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  std::vector<Complex> c(out_degree + 1);
  for (std::size_t i = 0; i < fc.size() && i <= out_degree; ++i) {
    if (fc[i] == Complex{}) continue;
    const std::size_t jmax = std::min(gc.size() - 1, out_degree - i);
    for (std::size_t j = 0; j <= jmax; ++j) c[i + j] += fc[i] * gc[j];
  }
  return TaylorSeries(std::move(c), f.truncated() || g.truncated() || out_degree < full);
}

TaylorSeries cauchy_product(const TaylorSeries& f, const TaylorSeries& g) {
  return cauchy_product(f, g, f.degree() + g.degree());
}

Sample clamp_sample(Complex v) {
  const double m = std::abs(v);
  if (!std::isfinite(m) || m > kOverflowClamp) {
    return {Complex(std::numeric_limits<double>::infinity(), 0.0), true};
  }
  return {v, false};
}

FunctionHandle::FunctionHandle(std::variant<TaylorSeries, ClosedForm> repr, double radius)
    : repr_(std::move(repr)), radius_(radius) {
  if (!(radius_ > 0.0 && radius_ <= 1.0)) {
    throw std::invalid_argument("FunctionHandle: domain radius must lie in (0, 1]");
  }
}

FunctionHandle FunctionHandle::from_series(TaylorSeries s, double domain_radius) {
  return FunctionHandle(std::move(s), domain_radius);
}

FunctionHandle FunctionHandle::from_closed_form(ClosedForm f, double domain_radius) {
  if (!f.value) throw std::invalid_argument("FunctionHandle: closed form needs a value evaluator");
  return FunctionHandle(std::move(f), domain_radius);
}

bool FunctionHandle::has_derivative() const {
  if (is_series()) return true;
  return static_cast<bool>(closed_form()->first);
}

FunctionHandle FunctionHandle::derivative() const {
  if (const auto* s = series()) return from_series(volterra::derivative(*s), radius_);
  const auto& cf = *closed_form();
  if (!cf.first) throw std::logic_error("FunctionHandle: no derivative evaluator");
  return from_closed_form(ClosedForm{cf.first, cf.second, {}}, radius_);
}

Sample eval(const FunctionHandle& f, Complex z) {
  if (std::abs(z) >= f.domain_radius()) {
    throw DomainError("eval: point outside the domain disk");
  }
  if (const auto* s = f.series()) return clamp_sample((*s)(z));
  return clamp_sample(f.closed_form()->value(z));
}

std::vector<Complex> derivative_probe_grid() {
  std::vector<Complex> pts;
  for (double r : {0.0, 0.125, 0.25, 0.375, 0.5}) {
    const int m = r == 0.0 ? 1 : 12;
    for (int j = 0; j < m; ++j) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / m));
    }
  }
  return pts;
}

namespace {

double fd_residual(const ComplexFn& f, const ComplexFn& df, double h) {
  double worst = 0.0;
  for (Complex z : derivative_probe_grid()) {
    const Complex fd = (f(z + h) - f(z - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - df(z)));
  }
  return worst;
}

}  // namespace

double derivative_consistency_residual(const FunctionHandle& f, double h) {
  const auto* cf = f.closed_form();
  if (cf == nullptr || !cf->first) return 0.0;
  double r = fd_residual(cf->value, cf->first, h);
  if (cf->second) r = std::max(r, fd_residual(cf->first, cf->second, h));
  return r;
}

}  // namespace volterra
