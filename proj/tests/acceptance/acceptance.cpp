// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "volterra/criteria.hpp"
#include "volterra/estimation.hpp"
#include "volterra/ground_truth.hpp"
#include "volterra/operators.hpp"
#include "volterra/parallel.hpp"
#include "volterra/report.hpp"
#include "volterra/sector.hpp"

using namespace volterra;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail += "; ";
      else detail.clear();
      pass = false;
      detail += what;
    }
  }
};

const SymbolSpec& sym(const char* name) { return *find_symbol(name); }

std::string num(double x) { return format_number(x); }

const Verdict* criterion(const CriterionReport& rep, const std::string& name) {
  for (const auto& e : rep.criteria) {
    if (e.criterion == name) return &e.verdict;
  }
  return nullptr;
}

const ReportRow* find_row(const Report& r, const char* symbol, OperatorKind op, double a, double b) {
  for (const auto& row : r.rows) {
    if (row.expected.symbol == symbol && row.expected.op == op && row.expected.pair.alpha == a &&
        row.expected.pair.beta == b) {
      return &row;
    }
  }
  return nullptr;
}

std::mt19937_64 rng(7);

TaylorSeries random_series(std::size_t degree) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = {d(rng), d(rng)};
  return TaylorSeries(std::move(c));
}

Complex random_point(double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

// Criterion 1: the default report reproduces the ground truth.
Outcome ground_truth(const Report& report, double seconds) {
  Outcome o;
  o.detail = std::to_string(report.rows.size()) + " rows, " + std::to_string(report.disagreements) +
             " disagreements, " + num(seconds) + " s";
  o.require(report.disagreements == 0, std::to_string(report.disagreements) + " disagreeing rows");
  for (const auto& r : report.rows) o.require(r.agree, r.expected.symbol + " " + to_string(r.expected.op) + ": " + r.diagnostics);

  auto check = [&](const char* s, OperatorKind op, double a, double b, const std::string& verdict,
                   std::optional<double> value, double tol) {
    const ReportRow* row = find_row(report, s, op, a, b);
    const std::string label = std::string(s) + " " + to_string(op) + " (" + num(a) + "," + num(b) + ")";
    if (row == nullptr) return o.require(false, "missing row " + label);
    o.require(row->report.verdict_string().rfind(verdict, 0) == 0,
              label + " verdict " + row->report.verdict_string() + ", expected " + verdict);
    if (value) {
      const auto& v = row->report.boundedness.value;
      o.require(v && std::abs(*v - *value) <= tol, label + " value " + (v ? num(*v) : "none"));
    }
  };
  check("identity", OperatorKind::Tg, 0, 0, "Bounded", 1.0, 1e-4);
  check("log", OperatorKind::Tg, 0, 0, "Unbounded", std::nullopt, 0);
  check("log", OperatorKind::Tg, 0, 1, "Bounded+Compact", std::nullopt, 0);
  check("koebe3", OperatorKind::Tg, 0, 1, "Unbounded", std::nullopt, 0);
  check("cayley", OperatorKind::Sg, 0, 1, "Bounded+NotCompact", 2.0, 1e-3);
  check("affine", OperatorKind::Sg, 1, 0, "Unbounded", std::nullopt, 0);
  check("affine", OperatorKind::Sg, 1, 1, "Bounded", std::nullopt, 0);
  check("identity", OperatorKind::Sg, 0, 0, "Bounded", std::nullopt, 0);
  check("identity", OperatorKind::Tg, 0, 0, "Bounded+Compact", std::nullopt, 0);
  const ReportRow* zero = find_row(report, "zero", OperatorKind::Sg, 1, 0);
  o.require(zero && zero->report.compactness.tag == VerdictTag::Compact, "zero S_g (1,0) not Compact");
  const ReportRow* fwd = find_row(report, "identity", OperatorKind::Sg, 0, 0);
  o.require(fwd && fwd->report.forwarded, "identity S_g (0,0) not forwarded");
  o.require(seconds <= 300.0, "runtime " + num(seconds) + " s exceeds 300 s");
  return o;
}

// Criterion 2: T_g f + S_g f = fg - f(0)g(0).
Outcome product_rule() {
  Outcome o;
  double worst = 0.0;
  std::uniform_int_distribution<std::size_t> deg(0, 50);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_series(deg(rng)), g = random_series(deg(rng));
    worst = std::max(worst, product_rule_residual(g, f, random_point(0.9)));
  }
  o.detail = "max residual " + num(worst) + " over 100 triples";
  o.require(worst < 1e-10, o.detail);
  return o;
}

// Criterion 3: coefficients of T_g f against direct summation.
Outcome coefficient_oracle() {
  Outcome o;
  double worst = 0.0;
  std::uniform_int_distribution<std::size_t> deg(1, 60);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_series(deg(rng)), g = random_series(deg(rng));
    const auto t = apply_Tg(g, f);
    for (std::size_t n = 1; n <= t.degree(); ++n) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += f[k] * static_cast<double>(n - k) * g[n - k];
      s /= static_cast<double>(n);
      if (s != Complex{}) worst = std::max(worst, std::abs(t[n] - s) / std::abs(s));
      else worst = std::max(worst, std::abs(t[n]));
    }
  }
  o.detail = "max relative deviation " + num(worst) + " over 100 pairs";
  o.require(worst <= 1e-13, o.detail);
  return o;
}

// Criterion 4: ladder limit equals the full radial integral at alpha = beta = 0.
Outcome full_integral_equivalence() {
  Outcome o;
  double worst = 0.0;
  int bounded = 0;
  for (const auto& g : registry()) {
    const LadderResult ladder = boundedness_Tg_integral(g, {0.0, 0.0});
    if (ladder.verdict.tag != VerdictTag::Bounded) continue;
    ++bounded;
    const FullIntegral full = full_radial_integral(g);
    o.require(full.verdict.tag == VerdictTag::Bounded, g.name + ": full integral not Bounded");
    const double d = std::abs(*ladder.verdict.value - full.value);
    worst = std::max(worst, d);
    o.require(d <= 1e-4, g.name + ": |ladder - full| = " + num(d));
  }
  if (o.pass) o.detail = std::to_string(bounded) + " bounded symbols, max deviation " + num(worst);
  return o;
}

// Criterion 5: integral and pointwise criteria agree wherever both apply.
Outcome cross_criteria() {
  Outcome o;
  int compared = 0;
  const std::vector<SpacePair> pairs{{0.0, 1.0}, {0.0, 0.5}, {0.5, 1.0}, {1.0, 1.0}, {1.0, 2.0}, {0.0, 2.0},
                                     {1.0, 0.5}, {2.0, 2.0}};
  auto same = [&](const CriterionReport& rep, const char* a, const char* b) {
    const Verdict* x = criterion(rep, a);
    const Verdict* y = criterion(rep, b);
    const std::string label = rep.symbol + " " + to_string(rep.op) + " (" + num(rep.pair.alpha) + "," +
                              num(rep.pair.beta) + ") " + a + "/" + b;
    if (!x || !y) return o.require(false, label + " missing");
    ++compared;
    o.require(x->decided() && y->decided() && x->tag == y->tag,
              label + ": " + to_string(x->tag) + " vs " + to_string(y->tag));
  };
  for (const auto& g : registry()) {
    for (const SpacePair& p : pairs) {
      if (g.metadata.log_deriv_bloch == Tristate::True) {
        const CriterionReport r = classify(g, OperatorKind::Tg, p);
        same(r, "tg_integral", "tg_pointwise");
        same(r, "tg_tail", "tg_pointwise_limit");
      }
      if (g.metadata.log_symbol_bloch == Tristate::True && p.alpha > 0.0) {
        const CriterionReport r = classify(g, OperatorKind::Sg, p);
        same(r, "sg_integral", "sg_pointwise");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " criterion pairs, 0 disagreements";
  return o;
}

// Criterion 6: empirical lower bound <= integral upper bound.
Outcome norm_sandwich(const Report& report) {
  Outcome o;
  int checked = 0;
  for (const auto& r : report.rows) {
    if (r.report.boundedness.tag != VerdictTag::Bounded || !r.upper) continue;
    ++checked;
    o.require(*r.lower <= *r.upper + 1e-6,
              r.expected.symbol + ": lower " + num(*r.lower) + " > upper " + num(*r.upper));
  }
  const ReportRow* id = find_row(report, "identity", OperatorKind::Tg, 0, 0);
  o.require(id && id->lower && id->upper, "identity T_g (0,0) bounds missing");
  if (id && id->lower && id->upper) {
    o.require(std::abs(*id->lower - 1.0) <= 1e-3 && std::abs(*id->upper - 1.0) <= 1e-3,
              "identity bounds " + num(*id->lower) + ", " + num(*id->upper));
  }
  if (o.pass) o.detail = std::to_string(checked) + " bounded rows; identity sandwich " + num(*id->lower) + " <= " + num(*id->upper);
  return o;
}

// Criterion 7: compactness probes.
Outcome probes() {
  Outcome o;
  const ProbeTrace t = compactness_probe(sym("identity"), OperatorKind::Tg, {0.0, 0.0});
  double worst = 0.0;
  for (std::size_t i = 0; i < t.n.size(); ++i) worst = std::max(worst, std::abs(t.values[i] - 1.0 / (t.n[i] + 1.0)));
  o.require(worst <= 1e-6, "T_z probe deviation " + num(worst));
  o.require(std::abs(t.decay_exponent + 1.0) <= 0.05, "T_z exponent " + num(t.decay_exponent));
  const ProbeTrace s = compactness_probe(sym("one"), OperatorKind::Sg, {0.0, 0.0});
  double dev = 0.0;
  for (double v : s.values) dev = std::max(dev, std::abs(v - 1.0));
  o.require(dev <= 1e-6, "S_1 probe deviation " + num(dev));
  if (o.pass) {
    o.detail = "T_z deviation " + num(worst) + ", exponent " + num(t.decay_exponent) + "; S_1 deviation " + num(dev);
  }
  return o;
}

// Criterion 8: sector map normalization, rotation equivariance and the density constant.
Outcome sector_constant() {
  Outcome o;
  std::string summary;
  const std::vector<std::pair<double, double>> cases{{M_PI / 4.0, M_PI / 2.0}, {M_PI / 3.0, 2.0 * M_PI / 3.0}};
  std::uniform_real_distribution<double> u(0.02, 0.98);
  for (const auto& [gamma, eta] : cases) {
    const SectorMap base = build_sector_map(SectorParams(eta, 0.0));
    double residual = 0.0, rotation = 0.0;
    for (int j = 0; j < 8; ++j) {
      const double theta = 2.0 * M_PI * j / 8.0;
      const SectorMap m = build_sector_map(SectorParams(eta, theta));
      residual = std::max({residual, m.center_residual, m.vertex_residual});
      for (int i = 0; i < 100; ++i) {
        const Complex z = std::polar(u(rng), theta + eta * (u(rng) - 0.5));
        const Complex expect = std::polar(1.0, theta) * base.psi.closed_form()->value(z * std::polar(1.0, -theta));
        rotation = std::max(rotation, std::abs(m.psi.closed_form()->value(z) - expect));
      }
    }
    const double e3 = estimate_C1(gamma, eta, 1000), e4 = estimate_C1(gamma, eta, 10000),
                 e5 = estimate_C1(gamma, eta, 100000);
    const std::string label = "(" + num(gamma) + "," + num(eta) + ")";
    o.require(residual < 1e-10, label + " normalization residual " + num(residual));
    o.require(rotation < 1e-10, label + " rotation deviation " + num(rotation));
    o.require(e3 <= e4 && e4 <= e5, label + " estimates not monotone");
    o.require(std::isfinite(e5) && e5 - e4 <= 0.05 * e4, label + " estimates not settling");
    summary += (summary.empty() ? "" : "; ") + label + ": C1 " + num(e3) + " / " + num(e4) + " / " + num(e5) + ", residual " + num(residual) +
               ", rotation " + num(rotation);
  }
  if (o.pass) o.detail = summary;
  return o;
}

// Criterion 9: reports do not depend on the worker count.
Outcome determinism(const std::string& reference) {
  Outcome o;
  for (std::size_t w : {1u, 4u}) {
    set_worker_count(w);
    const ReportConfig cfg;
    const std::string text = to_json(build_report(cfg), cfg).dump(2);
    o.require(text == reference, "report differs with " + std::to_string(w) + " workers");
  }
  set_worker_count(0);
  if (o.pass) o.detail = "identical JSON with default, 1 and 4 workers";
  return o;
}

// Criterion 10: radial quadrature against closed forms.
Outcome quadrature() {
  Outcome o;
  struct Case {
    const char* symbol;
    double theta, t, exact;
  };
  std::string summary;
  for (const Case& c : {Case{"identity", 0.7, 0.9, 0.9}, Case{"log", 0.0, 0.99, std::log(100.0)},
                        Case{"log", M_PI, 1.0 - std::exp2(-40.0), std::log(2.0)}}) {
    const RadialValue v = radial_integral(sym(c.symbol), 0.0, c.theta, c.t, {});
    const double err = std::abs(v.value - c.exact);
    o.require(err <= 1e-5 && v.evaluations <= 10000,
              std::string(c.symbol) + " error " + num(err) + " with " + std::to_string(v.evaluations) + " evaluations");
    summary += (summary.empty() ? "" : "; ") + std::string(c.symbol) + "@" + num(c.theta) + ": err " + num(err) + ", " +
               std::to_string(v.evaluations) + " evals";
  }
  if (o.pass) o.detail = summary;
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto print = [&](int id, const char* name, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };

  const ReportConfig cfg;
  const auto start = std::chrono::steady_clock::now();
  const Report report = build_report(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string reference = to_json(report, cfg).dump(2);

  print(1, "ground-truth classification", [&] { return ground_truth(report, seconds); });
  print(2, "product-rule identity", product_rule);
  print(3, "coefficient oracle", coefficient_oracle);
  print(4, "full radial integral equals ladder limit", full_integral_equivalence);
  print(5, "integral and pointwise criteria agree", cross_criteria);
  print(6, "norm sandwich", [&] { return norm_sandwich(report); });
  print(7, "compactness probes", probes);
  print(8, "sector density constant", sector_constant);
  print(9, "determinism across worker counts", [&] { return determinism(reference); });
  print(10, "radial quadrature accuracy", quadrature);
  return failures == 0 ? 0 : 1;
}
