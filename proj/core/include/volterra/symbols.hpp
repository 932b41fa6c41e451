#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "volterra/series.hpp"

namespace volterra {

enum class Tristate { False, True, Unknown };

const char* to_string(Tristate t);

/// Declared analytic facts about a symbol. These are hypotheses of the
/// classification criteria, recorded with a citation, never computed.
struct SymbolMetadata {
  bool is_zero = false;
  bool is_univalent = false;
  Tristate log_deriv_bloch = Tristate::Unknown;   // log(g') in the Bloch space
  Tristate log_symbol_bloch = Tristate::Unknown;  // log(g) in the Bloch space
  std::string citation;
};

/// Closed-form value of the unweighted radial integral of |g'| along one ray.
struct RadialOracle {
  double theta;
  std::function<double(double t)> integral;  // int_0^t |g'(r e^{i theta})| dr
};

/// A named symbol g with evaluators for g, g', g'' and its Taylor data.
struct SymbolSpec {
  std::string name;
  std::string formula;
  ComplexFn value;
  ComplexFn first;
  ComplexFn second;
  /// Coefficients c_0..c_degree of g.
  std::function<std::vector<Complex>(std::size_t degree)> coefficients;
  /// Bound on |sum_{n > degree} c_n z^n| for |z| <= radius.
  std::function<double(std::size_t degree, double radius)> tail_bound;
  SymbolMetadata metadata;
  std::vector<RadialOracle> radial_oracles;
  /// Known value of sup (1-|z|^2)|g(z)|, when it has a closed form.
  std::optional<double> weighted_symbol_sup;

  TaylorSeries taylor(std::size_t degree = kDefaultDegree) const;
  FunctionHandle handle() const;
  FunctionHandle derivative_handle() const;
};

/// The canonical symbol library, in a fixed order.
const std::vector<SymbolSpec>& registry();

/// Looks a symbol up by name; nullptr if absent.
const SymbolSpec* find_symbol(const std::string& name);

/// g(e^{i phi} z) with the same metadata; the name gets an "@phi" suffix.
SymbolSpec rotated(const SymbolSpec& g, double phi);

/// c * g with the same metadata (scaling does not change Bloch membership of
/// log g or log g').
SymbolSpec scaled(const SymbolSpec& g, Complex c);

nlohmann::json symbol_to_json(const SymbolSpec& g);

}  // namespace volterra
