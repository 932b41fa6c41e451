#include <doctest.h>

#include <cmath>

#include "volterra/estimation.hpp"
#include "volterra/ground_truth.hpp"

using namespace volterra;

namespace {

const SymbolSpec& sym(const char* name) {
  const SymbolSpec* g = find_symbol(name);
  REQUIRE(g != nullptr);
  return *g;
}

}  // namespace

TEST_SUITE("estimation") {
  TEST_CASE("monomial norms") {
    CHECK(zn_norm(5, 0.0) == 1.0);
    for (std::size_t n : {1u, 3u, 16u, 100u}) {
      for (double a : {0.5, 1.0, 2.0}) {
        const double exact = zn_norm(n, a);
        const double grid = weighted_sup_norm(FunctionHandle::from_series(TaylorSeries::monomial(n)), a).value;
        CHECK(grid == doctest::Approx(exact).epsilon(1e-6));
        CHECK(grid <= exact * (1.0 + 1e-12));
      }
    }
  }

  TEST_CASE("weak-null premise") {
    for (double a : {0.0, 0.5, 1.0, 3.0}) {
      // 2^{-n} n^{alpha} only decreases once n exceeds a few multiples of alpha.
      CHECK(weak_null_premise(1, a) <= 0.5 * (1.0 + 1e-12) / zn_norm(1, a));
      double prev = weak_null_premise(8, a);
      for (std::size_t n = 16; n <= 128; n *= 2) {
        const double v = weak_null_premise(n, a);
        CHECK(v < prev);
        prev = v;
      }
      CHECK(prev < 1e-20);
    }
  }

  TEST_CASE("battery") {
    const TestBattery b0 = standard_battery(0.0);
    CHECK(b0.entries.size() == 8);
    CHECK(b0.entries.front().label == "one");
    const TestBattery b1 = standard_battery(1.0);
    CHECK(b1.entries.size() == 8 + 8 + 56);
    for (const auto& e : b1.entries) {
      CAPTURE(e.label);
      CHECK(e.norm_alpha > 0.0);
      if (e.label.rfind("peak", 0) == 0) CHECK(e.norm_alpha <= 1.0 + 1e-9);
    }
    CHECK_THROWS_AS(standard_battery(-1.0), std::invalid_argument);
  }

  TEST_CASE("empirical lower bound examples") {
    const TestBattery b = standard_battery(0.0);
    CHECK(empirical_lower_bound(sym("identity"), OperatorKind::Tg, {0.0, 0.0}, b) >= 1.0 - 1e-12);
    CHECK(empirical_lower_bound(sym("half_square"), OperatorKind::Tg, {0.0, 0.0}, b) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const TestBattery b1 = standard_battery(1.0);
    for (auto op : {OperatorKind::Tg, OperatorKind::Sg}) {
      CHECK(empirical_lower_bound(sym("zero"), op, {0.0, 0.0}, b) == 0.0);
      CHECK(empirical_lower_bound(sym("zero"), op, {1.0, 1.0}, b1) == 0.0);
    }
  }

  TEST_CASE("integral upper bound") {
    LadderConfig from_half;
    from_half.k_min = 1;
    const UpperBound a = integral_upper_bound(sym("identity"), {0.0, 0.0}, 0.5, from_half);
    CHECK(a.m_t0 == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(a.n == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(a.sum == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(a.refined == doctest::Approx(1.0).epsilon(1e-9));
    const UpperBound b = integral_upper_bound(sym("identity"), {0.0, 0.0}, 1.0 - std::exp2(-20));
    CHECK(b.sum == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(b.refined == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(integral_upper_bound(sym("zero"), {0.0, 0.0}, 0.5, from_half).refined == 0.0);
    CHECK_THROWS_AS(integral_upper_bound(sym("log"), {0.0, 0.0}, 0.5, from_half), HypothesisError);
    CHECK_THROWS_AS(integral_upper_bound(sym("identity"), {0.0, 0.0}, 0.6, from_half), std::invalid_argument);
    CHECK_THROWS_AS(integral_upper_bound(sym("identity"), {0.0, 0.0}, 0.5), std::invalid_argument);
  }

  TEST_CASE("norm sandwich on bounded rows") {
    for (const auto& row : ground_truth_table()) {
      if (row.op != OperatorKind::Tg || row.boundedness != VerdictTag::Bounded) continue;
      CAPTURE(row.symbol);
      CAPTURE(row.pair.beta);
      const SymbolSpec& g = sym(row.symbol.c_str());
      const double lower = empirical_lower_bound(g, row.op, row.pair, standard_battery(row.pair.alpha));
      const UpperBound upper = integral_upper_bound(g, row.pair, 0.875);
      CHECK(lower <= upper.refined + 1e-6);
    }
  }

  TEST_CASE("probe closed forms") {
    const ProbeTrace t = compactness_probe(sym("identity"), OperatorKind::Tg, {0.0, 0.0});
    REQUIRE(t.values.size() == 128);
    for (std::size_t i = 0; i < t.n.size(); ++i) CHECK(std::abs(t.values[i] - 1.0 / (t.n[i] + 1.0)) <= 1e-6);
    CHECK(std::abs(t.decay_exponent + 1.0) <= 0.05);

    const ProbeTrace s = compactness_probe(sym("one"), OperatorKind::Sg, {0.0, 0.0});
    for (double v : s.values) CHECK(std::abs(v - 1.0) <= 1e-6);

    const ProbeTrace z = compactness_probe(sym("zero"), OperatorKind::Tg, {0.0, 0.0});
    for (double v : z.values) CHECK(v == 0.0);
    CHECK_THROWS_AS(compactness_probe(sym("identity"), OperatorKind::Tg, {0.0, 0.0}, 8), std::invalid_argument);
  }

  TEST_CASE("probes agree with the compactness verdicts") {
    for (const auto& row : ground_truth_table()) {
      if (!row.compactness) continue;
      CAPTURE(row.symbol);
      CAPTURE(to_string(row.op));
      const ProbeTrace t = compactness_probe(sym(row.symbol.c_str()), row.op, row.pair);
      const bool vanishes = std::all_of(t.values.begin(), t.values.end(), [](double v) { return v == 0.0; });
      if (*row.compactness == VerdictTag::Compact && !vanishes) {
        CHECK(t.decay_exponent < 0.0);
        if (row.symbol != "lacunary") CHECK(t.values.back() < 1e-2);
      }
    }
    // Non-decay predicted in closed form: S_1 z^n = z^n and S_z z^n = n z^{n+1}/(n+1).
    for (const char* name : {"one", "identity"}) {
      const ProbeTrace t = compactness_probe(sym(name), OperatorKind::Sg, {0.0, 0.0});
      for (double v : t.values) CHECK(v >= 0.1 * t.values.front());
    }
  }

  TEST_CASE("lower bounds grow on unbounded rows with beta = 0") {
    for (const auto& row : ground_truth_table()) {
      if (row.boundedness != VerdictTag::Unbounded || row.pair.beta != 0.0) continue;
      CAPTURE(row.symbol);
      const auto ladder =
          lower_bound_ladder(sym(row.symbol.c_str()), row.op, row.pair, standard_battery(row.pair.alpha));
      const auto& v = ladder.values;
      REQUIRE(v.size() >= 3);
      CHECK(v[v.size() - 2] >= 1.1 * v[v.size() - 3]);
      CHECK(v[v.size() - 1] >= 1.1 * v[v.size() - 2]);
    }
  }
}
