#include <doctest.h>

#include "support.hpp"
#include "volterra/operators.hpp"

using namespace volterra;
using testing::max_coeff;
using testing::max_coeff_diff;

TEST_SUITE("operators") {
  TEST_CASE("T_g examples") {
    const TaylorSeries z({0.0, 1.0}), z2({0.0, 0.0, 1.0}), one = TaylorSeries::constant(1.0);
    CHECK(max_coeff_diff(apply_Tg(z, one), z) == 0.0);
    CHECK(max_coeff_diff(apply_Tg(z2, one), z2) == 0.0);
    CHECK(max_coeff_diff(apply_Tg(z2, z), TaylorSeries({0.0, 0.0, 0.0, 2.0 / 3.0})) < 1e-16);
  }

  TEST_CASE("S_g examples") {
    const TaylorSeries z({0.0, 1.0});
    CHECK(max_coeff(apply_Sg(testing::random_series(10), TaylorSeries::constant(3.0))) == 0.0);
    CHECK(max_coeff_diff(apply_Sg(z, z), TaylorSeries({0.0, 0.0, 0.5})) == 0.0);
    const TaylorSeries f = testing::random_series(30);
    TaylorSeries expect = f - TaylorSeries::constant(f[0]);
    CHECK(max_coeff_diff(apply_Sg(TaylorSeries::constant(1.0), f), expect) < 1e-15 * max_coeff(f));
  }

  TEST_CASE("both operators vanish at the origin") {
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = testing::random_series(25), g = testing::random_series(25);
      CHECK(apply_Tg(g, f)[0] == Complex{});
      CHECK(apply_Sg(g, f)[0] == Complex{});
    }
  }

  TEST_CASE("linearity in f") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = testing::random_series(30), f1 = testing::random_series(30), f2 = testing::random_series(30);
      const Complex a(1.5, -0.25), b(-0.5, 2.0);
      for (auto op : {OperatorKind::Tg, OperatorKind::Sg}) {
        const auto lhs = apply(op, g, a * f1 + b * f2);
        const auto rhs = a * apply(op, g, f1) + b * apply(op, g, f2);
        CHECK(max_coeff_diff(lhs, rhs) <= 1e-12 * max_coeff(lhs));
      }
    }
  }

  TEST_CASE("direct summation coefficient formula") {
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = testing::random_series(40), g = testing::random_series(40);
      const auto t = apply_Tg(g, f);
      for (std::size_t n = 1; n <= t.degree(); ++n) {
        Complex sum{};
        for (std::size_t k = 0; k < n; ++k) sum += f[k] * static_cast<double>(n - k) * g[n - k];
        sum /= static_cast<double>(n);
        CHECK(std::abs(t[n] - sum) <= 1e-13 * std::max(1.0, std::abs(sum)));
      }
    }
  }

  TEST_CASE("product rule") {
    CHECK(product_rule_residual(TaylorSeries(), testing::random_series(10), 0.5) == 0.0);
    CHECK(product_rule_residual(TaylorSeries({0.0, 1.0}), TaylorSeries({1.0, 1.0}), 0.5) < 1e-14);
    const auto f = testing::random_series(20), g = testing::random_series(20);
    CHECK(product_rule_residual(g, f, std::polar(0.9, M_PI / 3.0)) < 1e-10);
    for (int trial = 0; trial < 50; ++trial) {
      const auto ff = testing::random_series(50), gg = testing::random_series(50);
      CHECK(product_rule_residual(gg, ff, testing::random_point(0.9)) < 1e-10);
    }
    CHECK_THROWS_AS(product_rule_residual(g, f, 0.95), DomainError);
  }

  TEST_CASE("operator names") {
    CHECK(parse_operator("Tg") == OperatorKind::Tg);
    CHECK(parse_operator("Sg") == OperatorKind::Sg);
    CHECK(std::string(to_string(OperatorKind::Sg)) == "Sg");
    CHECK_THROWS(parse_operator("Mg"));
  }
}
