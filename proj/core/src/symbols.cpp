#include "volterra/symbols.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace volterra {

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::True: return "true";
    case Tristate::False: return "false";
    case Tristate::Unknown: break;
  }
  return "unknown";
}

TaylorSeries SymbolSpec::taylor(std::size_t degree) const {
  return TaylorSeries(coefficients(degree));
}

FunctionHandle SymbolSpec::handle() const {
  return FunctionHandle::from_closed_form(ClosedForm{value, first, second});
}

FunctionHandle SymbolSpec::derivative_handle() const {
  return FunctionHandle::from_closed_form(ClosedForm{first, second, {}});
}

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> sparse_coeffs(std::size_t degree, std::initializer_list<std::pair<std::size_t, double>> terms) {
  std::vector<Complex> c(degree + 1);
  for (auto [n, v] : terms) {
    if (n <= degree) c[n] = v;
  }
  return c;
}

// Tail bound for polynomials: zero once the degree covers every term.
std::function<double(std::size_t, double)> polynomial_tail(std::size_t poly_degree, double coeff_l1) {
  return [=](std::size_t degree, double radius) {
    return degree >= poly_degree ? 0.0 : coeff_l1 * std::pow(radius, static_cast<double>(degree + 1));
  };
}

double geometric_tail(std::size_t degree, double r) {
  return std::pow(r, static_cast<double>(degree + 1)) / (1.0 - r);
}

SymbolSpec make_zero() {
  SymbolSpec g;
  g.name = "zero";
  g.formula = "0";
  g.value = g.first = g.second = [](Complex) { return Complex{}; };
  g.coefficients = [](std::size_t d) { return std::vector<Complex>(d + 1); };
  g.tail_bound = [](std::size_t, double) { return 0.0; };
  g.metadata = {true, false, Tristate::False, Tristate::False,
                "zero symbol; log g and log g' do not exist"};
  g.radial_oracles = {{0.0, [](double) { return 0.0; }}};
  g.weighted_symbol_sup = 0.0;
  return g;
}

SymbolSpec make_one() {
  SymbolSpec g;
  g.name = "one";
  g.formula = "1";
  g.value = [](Complex) { return Complex(1.0); };
  g.first = g.second = [](Complex) { return Complex{}; };
  g.coefficients = [](std::size_t d) { return sparse_coeffs(d, {{0, 1.0}}); };
  g.tail_bound = polynomial_tail(0, 1.0);
  g.metadata = {false, false, Tristate::False, Tristate::True,
                "constant; log g = 0 is Bloch, g' = 0 so log g' does not exist"};
  g.radial_oracles = {{0.0, [](double) { return 0.0; }}};
  g.weighted_symbol_sup = 1.0;
  return g;
}

SymbolSpec make_identity() {
  SymbolSpec g;
  g.name = "identity";
  g.formula = "z";
  g.value = [](Complex z) { return z; };
  g.first = [](Complex) { return Complex(1.0); };
  g.second = [](Complex) { return Complex{}; };
  g.coefficients = [](std::size_t d) { return sparse_coeffs(d, {{1, 1.0}}); };
  g.tail_bound = polynomial_tail(1, 1.0);
  g.metadata = {false, true, Tristate::True, Tristate::False,
                "univalent; g' = 1 so log g' = 0; log g singular at 0"};
  g.radial_oracles = {{0.0, [](double t) { return t; }}, {kPi, [](double t) { return t; }}};
  g.weighted_symbol_sup = 2.0 / (3.0 * std::sqrt(3.0));  // r(1-r^2) peaks at r = 1/sqrt 3
  return g;
}

SymbolSpec make_half_square() {
  SymbolSpec g;
  g.name = "half_square";
  g.formula = "z^2/2";
  g.value = [](Complex z) { return 0.5 * z * z; };
  g.first = [](Complex z) { return z; };
  g.second = [](Complex) { return Complex(1.0); };
  g.coefficients = [](std::size_t d) { return sparse_coeffs(d, {{2, 0.5}}); };
  g.tail_bound = polynomial_tail(2, 0.5);
  g.metadata = {false, false, Tristate::False, Tristate::False,
                "not univalent; g'(0) = 0 so log g' is singular at 0"};
  g.radial_oracles = {{0.0, [](double t) { return 0.5 * t * t; }}};
  return g;
}

SymbolSpec make_log(const std::string& name) {
  SymbolSpec g;
  g.name = name;
  g.formula = "-log(1-z)";
  g.value = [](Complex z) { return -std::log(1.0 - z); };
  g.first = [](Complex z) { return 1.0 / (1.0 - z); };
  g.second = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    return w * w;
  };
  g.coefficients = [](std::size_t d) {
    std::vector<Complex> c(d + 1);
    for (std::size_t n = 1; n <= d; ++n) c[n] = 1.0 / static_cast<double>(n);
    return c;
  };
  g.tail_bound = [](std::size_t d, double r) {
    return std::pow(r, static_cast<double>(d + 1)) / (static_cast<double>(d + 1) * (1.0 - r));
  };
  g.metadata = {false, true, Tristate::True, Tristate::False,
                "univalent (log of a half-plane map), hence log g' in Bloch; g(0) = 0"};
  g.radial_oracles = {{0.0, [](double t) { return -std::log1p(-t); }},
                      {kPi, [](double t) { return std::log1p(t); }}};
  return g;
}

SymbolSpec make_koebe2() {
  SymbolSpec g;
  g.name = "koebe2";
  g.formula = "z/(1-z)";
  g.value = [](Complex z) { return z / (1.0 - z); };
  g.first = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    return w * w;
  };
  g.second = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    return 2.0 * w * w * w;
  };
  g.coefficients = [](std::size_t d) {
    std::vector<Complex> c(d + 1, Complex(1.0));
    c[0] = 0.0;
    return c;
  };
  g.tail_bound = geometric_tail;
  g.metadata = {false, true, Tristate::True, Tristate::False,
                "univalent (Moebius map); g' = (1-z)^-2; g(0) = 0"};
  g.radial_oracles = {{0.0, [](double t) { return 1.0 / (1.0 - t) - 1.0; }}};
  return g;
}

SymbolSpec make_koebe3() {
  SymbolSpec g;
  g.name = "koebe3";
  g.formula = "((1-z)^-2 - 1)/2";
  g.value = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    return 0.5 * (w * w - 1.0);
  };
  g.first = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    return w * w * w;
  };
  g.second = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    const Complex w2 = w * w;
    return 3.0 * w2 * w2;
  };
  g.coefficients = [](std::size_t d) {
    std::vector<Complex> c(d + 1);
    for (std::size_t n = 1; n <= d; ++n) c[n] = 0.5 * static_cast<double>(n + 1);
    return c;
  };
  g.tail_bound = [](std::size_t d, double r) {
    const double n = static_cast<double>(d);
    return 0.5 * std::pow(r, n + 1.0) * ((n + 2.0) / (1.0 - r) + r / ((1.0 - r) * (1.0 - r)));
  };
  g.metadata = {false, true, Tristate::True, Tristate::False,
                "univalent (square of a half-plane map avoiding its reflection); g' = (1-z)^-3"};
  g.radial_oracles = {{0.0, [](double t) { return 0.5 * (1.0 / ((1.0 - t) * (1.0 - t)) - 1.0); }}};
  return g;
}

SymbolSpec make_affine() {
  SymbolSpec g;
  g.name = "affine";
  g.formula = "1-z";
  g.value = [](Complex z) { return 1.0 - z; };
  g.first = [](Complex) { return Complex(-1.0); };
  g.second = [](Complex) { return Complex{}; };
  g.coefficients = [](std::size_t d) { return sparse_coeffs(d, {{0, 1.0}, {1, -1.0}}); };
  g.tail_bound = polynomial_tail(1, 2.0);
  g.metadata = {false, true, Tristate::True, Tristate::True,
                "univalent; log(1-z) has derivative -1/(1-z), Bloch norm 2"};
  g.radial_oracles = {{0.0, [](double t) { return t; }}};
  g.weighted_symbol_sup = 32.0 / 27.0;  // (1-r)(1+r)^2 on the negative axis peaks at r = 1/3
  return g;
}

SymbolSpec make_cayley() {
  SymbolSpec g;
  g.name = "cayley";
  g.formula = "1/(1-z)";
  g.value = [](Complex z) { return 1.0 / (1.0 - z); };
  g.first = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    return w * w;
  };
  g.second = [](Complex z) {
    const Complex w = 1.0 / (1.0 - z);
    return 2.0 * w * w * w;
  };
  g.coefficients = [](std::size_t d) { return std::vector<Complex>(d + 1, Complex(1.0)); };
  g.tail_bound = geometric_tail;
  g.metadata = {false, true, Tristate::True, Tristate::True,
                "univalent (Moebius map); log g = -log(1-z) in Bloch"};
  g.radial_oracles = {{0.0, [](double t) { return 1.0 / (1.0 - t) - 1.0; }}};
  g.weighted_symbol_sup = 2.0;  // (1-r^2)/(1-r) = 1+r
  return g;
}

constexpr int kLacunaryTerms = 7;

Complex ipow(Complex z, std::size_t n) {
  Complex acc = 1.0;
  for (; n != 0; n >>= 1, z *= z) {
    if (n & 1) acc *= z;
  }
  return acc;
}  // z + z^2 + z^4 + ... + z^64

SymbolSpec make_lacunary() {
  SymbolSpec g;
  g.name = "lacunary";
  g.formula = "sum_{k=0..6} z^(2^k)";
  g.value = [](Complex z) {
    Complex acc{}, p = z;
    for (int k = 0; k < kLacunaryTerms; ++k) {
      acc += p;
      p *= p;
    }
    return acc;
  };
  g.first = [](Complex z) {
    Complex acc{};
    for (int k = 0; k < kLacunaryTerms; ++k) {
      const std::size_t e = std::size_t{1} << k;
      acc += static_cast<double>(e) * ipow(z, e - 1);
    }
    return acc;
  };
  g.second = [](Complex z) {
    Complex acc{};
    for (int k = 1; k < kLacunaryTerms; ++k) {
      const std::size_t e = std::size_t{1} << k;
      acc += static_cast<double>(e * (e - 1)) * ipow(z, e - 2);
    }
    return acc;
  };
  g.coefficients = [](std::size_t d) {
    std::vector<Complex> c(d + 1);
    for (int k = 0; k < kLacunaryTerms; ++k) {
      const std::size_t n = std::size_t{1} << k;
      if (n <= d) c[n] = 1.0;
    }
    return c;
  };
  g.tail_bound = polynomial_tail(std::size_t{1} << (kLacunaryTerms - 1), kLacunaryTerms);
  g.metadata = {false, false, Tristate::Unknown, Tristate::False,
                "lacunary partial sum; zeros of g' not analysed, so log g' membership is not asserted"};
  g.radial_oracles = {};
  return g;
}

std::vector<SymbolSpec> build_registry() {
  std::vector<SymbolSpec> r;
  r.push_back(make_zero());
  r.push_back(make_one());
  r.push_back(make_identity());
  r.push_back(make_half_square());
  r.push_back(make_log("log"));
  r.push_back(make_log("koebe1"));
  r.push_back(make_koebe2());
  r.push_back(make_koebe3());
  r.push_back(make_affine());
  r.push_back(make_cayley());
  r.push_back(make_lacunary());
  return r;
}

}  // namespace

const std::vector<SymbolSpec>& registry() {
  static const std::vector<SymbolSpec> symbols = build_registry();
  return symbols;
}

const SymbolSpec* find_symbol(const std::string& name) {
  for (const auto& g : registry()) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

SymbolSpec rotated(const SymbolSpec& g, double phi) {
  SymbolSpec out = g;
  const Complex u = std::polar(1.0, phi);
  std::ostringstream name;
  name << g.name << "@" << phi;
  out.name = name.str();
  out.formula = g.formula + " at e^{i phi} z";
  out.value = [f = g.value, u](Complex z) { return f(u * z); };
  out.first = [f = g.first, u](Complex z) { return u * f(u * z); };
  out.second = [f = g.second, u](Complex z) { return u * u * f(u * z); };
  out.coefficients = [c = g.coefficients, u](std::size_t d) {
    auto coeffs = c(d);
    Complex p = 1.0;
    for (auto& x : coeffs) {
      x *= p;
      p *= u;
    }
    return coeffs;
  };
  out.radial_oracles.clear();
  for (const auto& o : g.radial_oracles) {
    double theta = std::fmod(o.theta - phi, 2.0 * kPi);
    if (theta < 0) theta += 2.0 * kPi;
    out.radial_oracles.push_back({theta, o.integral});
  }
  return out;
}

SymbolSpec scaled(const SymbolSpec& g, Complex c) {
  SymbolSpec out = g;
  std::ostringstream name;
  name << g.name << "*" << std::abs(c);
  out.name = name.str();
  out.value = [f = g.value, c](Complex z) { return c * f(z); };
  out.first = [f = g.first, c](Complex z) { return c * f(z); };
  out.second = [f = g.second, c](Complex z) { return c * f(z); };
  out.coefficients = [f = g.coefficients, c](std::size_t d) {
    auto coeffs = f(d);
    for (auto& x : coeffs) x *= c;
    return coeffs;
  };
  out.tail_bound = [t = g.tail_bound, m = std::abs(c)](std::size_t d, double r) { return m * t(d, r); };
  out.metadata.is_zero = g.metadata.is_zero || c == Complex{};
  for (auto& o : out.radial_oracles) {
    o.integral = [f = o.integral, m = std::abs(c)](double t) { return m * f(t); };
  }
  if (out.weighted_symbol_sup) *out.weighted_symbol_sup *= std::abs(c);
  return out;
}

nlohmann::json symbol_to_json(const SymbolSpec& g) {
  return {
      {"name", g.name},
      {"formula", g.formula},
      {"metadata",
       {{"is_zero", g.metadata.is_zero},
        {"is_univalent", g.metadata.is_univalent},
        {"log_deriv_bloch", to_string(g.metadata.log_deriv_bloch)},
        {"log_symbol_bloch", to_string(g.metadata.log_symbol_bloch)},
        {"citation", g.metadata.citation}}},
  };
}

}  // namespace volterra
