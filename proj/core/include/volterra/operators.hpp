#pragma once

#include <string_view>

#include "volterra/series.hpp"

namespace volterra {

enum class OperatorKind { Tg, Sg };

const char* to_string(OperatorKind op);

/// Parses "Tg" / "Sg" (case-insensitive). Throws std::invalid_argument.
OperatorKind parse_operator(std::string_view text);

/// (T_g f)(z) = int_0^z f g'.
TaylorSeries apply_Tg(const TaylorSeries& g, const TaylorSeries& f);

/// (S_g f)(z) = int_0^z f' g.
TaylorSeries apply_Sg(const TaylorSeries& g, const TaylorSeries& f);

TaylorSeries apply(OperatorKind op, const TaylorSeries& g, const TaylorSeries& f);

/// |(T_g f)(z) + (S_g f)(z) - (f(z)g(z) - f(0)g(0))|. Requires |z| <= 0.9.
double product_rule_residual(const TaylorSeries& g, const TaylorSeries& f, Complex z);

}  // namespace volterra
