#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace volterra {

using Complex = std::complex<double>;

/// Default truncation degree for every series pipeline.
inline constexpr std::size_t kDefaultDegree = 256;

/// Magnitudes beyond this are reported as divergent samples.
inline constexpr double kOverflowClamp = 1e300;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated power series sum_{n <= degree} c_n z^n.
///
/// Always holds at least one coefficient. The `truncated` flag records that a
/// product producing this series dropped terms above its degree.
class TaylorSeries {
 public:
  TaylorSeries() : coeffs_(1, Complex{}) {}
  explicit TaylorSeries(std::vector<Complex> coeffs, bool truncated = false);

  static TaylorSeries constant(Complex c) { return TaylorSeries({c}); }
  static TaylorSeries monomial(std::size_t n, Complex c = 1.0);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  bool truncated() const { return truncated_; }

  /// Coefficient of z^n; zero above the degree.
  Complex operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

  /// Horner evaluation of the truncated polynomial.
  Complex operator()(Complex z) const;

  /// Extends with zeros or drops trailing terms so that degree() == degree.
  TaylorSeries resized(std::size_t degree) const;

  friend TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b);
  friend TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b);
  friend TaylorSeries operator*(Complex c, const TaylorSeries& a);

 private:
  std::vector<Complex> coeffs_;
  bool truncated_ = false;
};

/// Term-by-term derivative; degree drops by one (never below zero).
TaylorSeries derivative(const TaylorSeries& f);

/// Antiderivative vanishing at the origin; degree rises by one.
TaylorSeries antiderivative(const TaylorSeries& f);

/// Coefficients 0..out_degree of f*g. Throws std::invalid_argument if
/// out_degree exceeds deg f + deg g; sets truncated() if it is smaller.
TaylorSeries cauchy_product(const TaylorSeries& f, const TaylorSeries& g, std::size_t out_degree);

/// Full product, degree deg f + deg g.
TaylorSeries cauchy_product(const TaylorSeries& f, const TaylorSeries& g);

using ComplexFn = std::function<Complex(Complex)>;

/// Analytic function given by closed-form evaluators. `first` and `second`
/// may be empty when the derivative is not available.
struct ClosedForm {
  ComplexFn value;
  ComplexFn first;
  ComplexFn second;
};

/// Result of a pointwise evaluation. A divergent sample carries an infinite
/// value instead of raising.
struct Sample {
  Complex value;
  bool divergent = false;
};

/// Clamps a raw value: anything non-finite or above kOverflowClamp becomes a
/// divergent sample.
Sample clamp_sample(Complex v);

/// Either a truncated series or a closed form, with the radius of the disk on
/// which evaluation is guaranteed finite.
class FunctionHandle {
 public:
  static FunctionHandle from_series(TaylorSeries s, double domain_radius = 1.0);
  static FunctionHandle from_closed_form(ClosedForm f, double domain_radius = 1.0);

  bool is_series() const { return std::holds_alternative<TaylorSeries>(repr_); }
  const TaylorSeries* series() const { return std::get_if<TaylorSeries>(&repr_); }
  const ClosedForm* closed_form() const { return std::get_if<ClosedForm>(&repr_); }
  double domain_radius() const { return radius_; }

  bool has_derivative() const;

  /// Handle for f'. Throws std::logic_error for a closed form without a
  /// first-derivative evaluator.
  FunctionHandle derivative() const;

 private:
  FunctionHandle(std::variant<TaylorSeries, ClosedForm> repr, double radius);

  std::variant<TaylorSeries, ClosedForm> repr_;
  double radius_;
};

/// Value of f at z. Throws DomainError when |z| >= domain_radius.
Sample eval(const FunctionHandle& f, Complex z);

/// Fixed probe grid inside |z| <= 0.5 used for derivative consistency checks.
std::vector<Complex> derivative_probe_grid();

/// Largest |(f(z+h) - f(z-h))/(2h) - f'(z)| over the probe grid, h = 1e-5.
/// Returns 0 when f has no derivative evaluator to check.
double derivative_consistency_residual(const FunctionHandle& f, double h = 1e-5);

}  // namespace volterra
