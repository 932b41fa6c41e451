#include <doctest.h>

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "volterra/ground_truth.hpp"
#include "volterra/symbols.hpp"

using namespace volterra;

TEST_SUITE("symbols") {
  TEST_CASE("registry names are unique and resolvable") {
    std::set<std::string> names;
    for (const auto& g : registry()) {
      CHECK(names.insert(g.name).second);
      CHECK(find_symbol(g.name) == &g);
      CHECK_FALSE(g.metadata.citation.empty());
    }
    CHECK(find_symbol("nosuch") == nullptr);
    for (const char* n : {"zero", "one", "identity", "log", "koebe1", "koebe2", "koebe3", "affine", "cayley"}) {
      CHECK(find_symbol(n) != nullptr);
    }
  }

  TEST_CASE("evaluators are consistent with their derivatives") {
    for (const auto& g : registry()) {
      CAPTURE(g.name);
      CHECK(derivative_consistency_residual(g.handle()) <= 1e-6);
      CHECK(derivative_consistency_residual(g.derivative_handle()) < 1e-7);
    }
  }

  TEST_CASE("taylor data matches the evaluators") {
    for (const auto& g : registry()) {
      CAPTURE(g.name);
      const TaylorSeries s = g.taylor(kDefaultDegree);
      for (Complex z : derivative_probe_grid()) {
        CHECK(std::abs(s(z) - g.value(z)) <= 1e-12 * (1.0 + std::abs(g.value(z))));
        CHECK(std::abs(derivative(s)(z) - g.first(z)) <= 1e-11 * (1.0 + std::abs(g.first(z))));
      }
    }
  }

  TEST_CASE("log symbol") {
    const SymbolSpec& g = *find_symbol("log");
    const TaylorSeries s = g.taylor(50);
    CHECK(s[0] == Complex{});
    for (std::size_t n = 1; n <= 50; ++n) CHECK(s[n].real() == doctest::Approx(1.0 / n).epsilon(1e-15));
    CHECK(g.value(0.5).real() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  }

  TEST_CASE("weighted symbol suprema") {
    for (const auto& g : registry()) {
      if (!g.weighted_symbol_sup) continue;
      CAPTURE(g.name);
      const SupNorm n = weighted_sup_norm(g.handle(), 1.0);
      CHECK(std::abs(n.value - *g.weighted_symbol_sup) <= 1e-6 * std::max(1.0, *g.weighted_symbol_sup));
    }
  }

  TEST_CASE("rotation and scaling keep metadata") {
    const SymbolSpec& g = *find_symbol("cayley");
    const SymbolSpec r = rotated(g, 1.0);
    CHECK(r.metadata.log_deriv_bloch == g.metadata.log_deriv_bloch);
    CHECK(std::abs(r.value(0.3) - g.value(std::polar(0.3, 1.0))) < 1e-15);
    const SymbolSpec s = scaled(g, Complex(0.0, 2.0));
    CHECK(std::abs(s.first(0.3) - Complex(0.0, 2.0) * g.first(0.3)) < 1e-15);
    CHECK(*s.weighted_symbol_sup == doctest::Approx(4.0));
  }

  TEST_CASE("json serialization") {
    const nlohmann::json j = symbol_to_json(*find_symbol("log"));
    CHECK(j.at("name") == "log");
    CHECK(j.contains("metadata"));
  }

  TEST_CASE("ground truth rows refer to registry symbols") {
    CHECK(ground_truth_table().size() >= 10);
    for (const auto& row : ground_truth_table()) {
      CAPTURE(row.symbol);
      CHECK(find_symbol(row.symbol) != nullptr);
      CHECK_FALSE(row.justification.empty());
      CHECK((row.boundedness || row.compactness));
    }
  }
}
