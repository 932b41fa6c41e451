#include "volterra/operators.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace volterra {

const char* to_string(OperatorKind op) { return op == OperatorKind::Tg ? "Tg" : "Sg"; }

OperatorKind parse_operator(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "tg") return OperatorKind::Tg;
  if (lower == "sg") return OperatorKind::Sg;
  throw std::invalid_argument("unknown operator '" + std::string(text) + "' (expected Tg or Sg)");
}

TaylorSeries apply_Tg(const TaylorSeries& g, const TaylorSeries& f) {
  const TaylorSeries dg = derivative(g);
  return antiderivative(cauchy_product(f, dg));
}

TaylorSeries apply_Sg(const TaylorSeries& g, const TaylorSeries& f) {
  const TaylorSeries df = derivative(f);
  return antiderivative(cauchy_product(df, g));
}

TaylorSeries apply(OperatorKind op, const TaylorSeries& g, const TaylorSeries& f) {
  return op == OperatorKind::Tg ? apply_Tg(g, f) : apply_Sg(g, f);
}

double product_rule_residual(const TaylorSeries& g, const TaylorSeries& f, Complex z) {
  if (std::abs(z) > 0.9) throw DomainError("product_rule_residual: |z| must be <= 0.9");
  const Complex lhs = apply_Tg(g, f)(z) + apply_Sg(g, f)(z);
  const Complex rhs = cauchy_product(f, g)(z) - f[0] * g[0];
  return std::abs(lhs - rhs);
}

}  // namespace volterra
