#include "volterra/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "ladder.hpp"
#include "volterra/optimize.hpp"
#include "volterra/parallel.hpp"

namespace volterra {

const char* to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Bounded: return "Bounded";
    case VerdictTag::Unbounded: return "Unbounded";
    case VerdictTag::Compact: return "Compact";
    case VerdictTag::NotCompact: return "NotCompact";
    case VerdictTag::Inconclusive: break;
  }
  return "Inconclusive";
}

namespace {

using namespace detail;

TailResult tail_from(const Build& b, Tristate hypothesis) {
  const auto& sw = b.sweep;
  const auto& cfg = b.cfg;
  TailResult out;
  const int last_lo = std::max(cfg.k_min, cfg.k_max - static_cast<int>(kWindow) + 1);
  for (int m = cfg.k_min; m <= cfg.k_max - static_cast<int>(kWindow); ++m) {
    double inner = 0.0;
    for (int k = std::max(last_lo, m + 1); k <= cfg.k_max; ++k) {
      double sup = 0.0;
      for (std::size_t a = 0; a < sw.angles.size(); ++a) {
        const auto& r = sw.c[a];
        sup = std::max(sup, std::accumulate(r.begin() + m, r.begin() + k, 0.0));
      }
      inner = std::max(inner, weight_power(std::exp2(-static_cast<double>(k)), b.beta) * sup);
    }
    out.m.push_back(m);
    out.inner.push_back(inner);
  }
  // The tail only vanishes for bounded operators; a growing ladder settles it.
  const Verdict bounded = slope_rule(b.ladder.values, b.ladder.reliable);
  if (bounded.tag == VerdictTag::Bounded) {
    out.verdict = decay_rule(out.inner);
  } else if (bounded.tag == VerdictTag::Unbounded) {
    out.verdict.tag = VerdictTag::NotCompact;
    out.verdict.reason = "ladder diverges, so the tail cannot vanish";
  } else {
    out.verdict.reason = "ladder undecided: " + bounded.reason;
  }
  out.verdict.evidence = {"tg_tail"};
  if (out.verdict.tag == VerdictTag::Compact && hypothesis != Tristate::True) {
    out.verdict.sufficiency_only = true;
    out.verdict.reason = "sufficient condition only: log(g') in the Bloch space not established";
  } else if (out.verdict.tag == VerdictTag::NotCompact && hypothesis != Tristate::True) {
    out.verdict.tag = VerdictTag::Inconclusive;
    out.verdict.reason = "hypothesis failure: tail does not vanish but log(g') in the Bloch space is not established";
  }
  return out;
}

Modulus abs_of(const ComplexFn& f) {
  return [f](Complex z) { return std::abs(f(z)); };
}

// Rung maxima at every fourth radial node counted back from the outermost, so
// that consecutive entries are one halving of 1 - |z| apart on standard grids.
std::vector<double> halving_sequence(const SupNorm& sup) {
  std::vector<double> out;
  const auto& rm = sup.rung_max;
  for (std::size_t i = rm.size(); i >= 1;) {
    out.push_back(rm[i - 1]);
    if (i <= 4) break;
    i -= 4;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

PointwiseResult pointwise_bound(const ComplexFn& f, double exponent, const DiskGrid& grid, const std::string& name) {
  PointwiseResult out;
  out.sup = weighted_modulus_sup(FunctionHandle::from_closed_form(ClosedForm{f, {}, {}}), exponent, grid);
  const auto seq = halving_sequence(out.sup);
  std::vector<bool> reliable(seq.size(), !out.sup.clamped);
  if (out.sup.divergent) {
    out.verdict.tag = VerdictTag::Unbounded;
    out.verdict.reason = "clamped samples with growing rung maxima";
  } else {
    out.verdict = slope_rule(seq, reliable);
    if (out.verdict.tag == VerdictTag::Bounded) out.verdict.value = out.sup.value;
  }
  out.verdict.evidence = {name};
  return out;
}

PointwiseResult pointwise_limit(const ComplexFn& f, double exponent, const DiskGrid& grid, const std::string& name) {
  PointwiseResult out;
  out.sup = weighted_modulus_sup(FunctionHandle::from_closed_form(ClosedForm{f, {}, {}}), exponent, grid);
  out.verdict = decay_rule(halving_sequence(out.sup));
  if (out.sup.divergent) {
    out.verdict.tag = VerdictTag::NotCompact;
    out.verdict.reason = "weighted modulus diverges";
  }
  out.verdict.evidence = {name};
  return out;
}

FullIntegral full_integral_from(const Build& b, const SymbolSpec& g) {
  FullIntegral out;
  out.verdict = ladder_verdict(b.ladder, g.metadata.log_deriv_bloch, "tg_full_integral",
                               "log(g') in the Bloch space");
  if (out.verdict.tag != VerdictTag::Bounded) return out;

  const auto& sw = b.sweep;
  const auto& cfg = b.cfg;
  auto full = [&](double theta) {
    bool hit = false;
    return integrate_radial_gaps(sw.integrand(theta, hit), 1.0, std::exp2(-kFullIntegralCells), cfg.quad, sw.log_sub)
        .value;
  };
  std::vector<double> profile(cfg.angles);
  for (std::size_t a = 0; a < cfg.angles; ++a) profile[a] = sw.prefix(a, cfg.k_max);
  std::vector<double> seeds;
  for (std::size_t a : circular_top_maxima(profile, 3)) seeds.push_back(sw.angles[a]);
  seeds.push_back(b.ladder.argmax_angles.back());
  const double h = kTwoPi / static_cast<double>(cfg.angles);
  std::vector<Argmax> found(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) {
    found[i] = golden_max(full, seeds[i] - h, seeds[i] + h, cfg.golden_iterations);
  });
  for (const auto& f : found) {
    if (f.value > out.value) {
      out.value = f.value;
      out.theta = f.x;
    }
  }
  out.verdict.value = out.value;
  return out;
}

}  // namespace

Verdict slope_rule(const std::vector<double>& values, const std::vector<bool>& reliable) {
  Verdict v;
  double vmax = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > kDivergenceThreshold) {
      v.tag = VerdictTag::Unbounded;
      v.reason = "value above divergence threshold 1e8";
      return v;
    }
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i < reliable.size() && reliable[i]) idx.push_back(i);
  }
  if (idx.size() < kWindow) {
    v.reason = "fewer than 8 reliable rungs";
    return v;
  }
  for (std::size_t i : idx) vmax = std::max(vmax, values[i]);
  idx.erase(idx.begin(), idx.end() - static_cast<std::ptrdiff_t>(kWindow));
  v.slope = log_slope(values, idx);
  if (v.slope > kGrowthSlope) {
    v.tag = VerdictTag::Unbounded;
  } else if (v.slope < kFlatSlope) {
    v.tag = VerdictTag::Bounded;
    v.value = vmax;
  } else {
    v.reason = "slope between thresholds";
  }
  return v;
}

Verdict decay_rule(const std::vector<double>& values) {
  Verdict v;
  if (std::all_of(values.begin(), values.end(), [](double x) { return x == 0.0; })) {
    v.tag = VerdictTag::Compact;
    v.value = 0.0;
    return v;
  }
  if (values.size() < kWindow) {
    v.reason = "fewer than 8 rungs";
    return v;
  }
  std::vector<std::size_t> idx(kWindow);
  std::iota(idx.begin(), idx.end(), values.size() - kWindow);
  v.slope = log_slope(values, idx);
  const double last = values.back();
  bool nonincreasing = true;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    nonincreasing = nonincreasing && values[idx[i]] <= values[idx[i - 1]] * (1.0 + 1e-9);
  }
  v.value = last;
  if ((last < kCompactTol && nonincreasing) || v.slope <= -kGrowthSlope) {
    v.tag = VerdictTag::Compact;
  } else if (last > kNotCompactTol && v.slope > -kFlatSlope) {
    v.tag = VerdictTag::NotCompact;
  } else {
    v.reason = "tail neither vanishes nor stabilizes";
  }
  return v;
}

RadialValue radial_integral(const SymbolSpec& g, double alpha, double theta, double t, const QuadratureConfig& quad) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("radial_integral: alpha must be >= 0");
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("radial_integral: need 0 <= t < 1");
  Sweep sw;
  sw.modulus = abs_of(g.first);
  sw.exponent = alpha;
  sw.log_sub = use_log_substitution(alpha);
  bool hit = false;
  const auto q = integrate_radial(sw.integrand(theta, hit), 0.0, t, quad, sw.log_sub);
  return {q.value, q.evaluations, q.converged, hit};
}

RadialValue sg_radial_integral(const SymbolSpec& g, double alpha, double theta, double t,
                               const QuadratureConfig& quad) {
  if (!(alpha > 0.0)) throw HypothesisError("sg_radial_integral: requires alpha > 0");
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("sg_radial_integral: need 0 <= t < 1");
  Sweep sw;
  sw.modulus = abs_of(g.value);
  sw.exponent = alpha + 1.0;
  sw.log_sub = true;
  bool hit = false;
  const auto q = integrate_radial(sw.integrand(theta, hit), 0.0, t, quad, sw.log_sub);
  return {q.value, q.evaluations, q.converged, hit};
}

LadderResult boundedness_Tg_integral(const SymbolSpec& g, const SpacePair& pair, const LadderConfig& cfg) {
  const Build b = build_ladder(abs_of(g.first), pair.alpha, pair.beta, cfg);
  return {b.ladder, ladder_verdict(b.ladder, g.metadata.log_deriv_bloch, "tg_integral", "log(g') in the Bloch space")};
}

LadderResult boundedness_Sg_integral(const SymbolSpec& g, const SpacePair& pair, const LadderConfig& cfg) {
  if (!(pair.alpha > 0.0)) throw HypothesisError("boundedness_Sg_integral: requires alpha > 0");
  const Build b = build_ladder(abs_of(g.value), pair.alpha + 1.0, pair.beta, cfg);
  return {b.ladder, ladder_verdict(b.ladder, g.metadata.log_symbol_bloch, "sg_integral", "log(g) in the Bloch space")};
}

PointwiseResult pointwise_Tg(const SymbolSpec& g, const SpacePair& pair, const DiskGrid& grid) {
  if (!(pair.beta > 0.0)) throw HypothesisError("pointwise_Tg: requires beta > 0");
  return pointwise_bound(g.first, pair.beta + 1.0 - pair.alpha, grid, "tg_pointwise");
}

PointwiseResult pointwise_Sg(const SymbolSpec& g, const SpacePair& pair, const DiskGrid& grid) {
  if (!(pair.beta > 0.0)) throw HypothesisError("pointwise_Sg: requires beta > 0");
  return pointwise_bound(g.value, pair.beta - pair.alpha, grid, "sg_pointwise");
}

TailResult compactness_Tg_tail(const SymbolSpec& g, const SpacePair& pair, const LadderConfig& cfg) {
  const Build b = build_ladder(abs_of(g.first), pair.alpha, pair.beta, cfg);
  return tail_from(b, g.metadata.log_deriv_bloch);
}

PointwiseResult compactness_pointwise(const SymbolSpec& g, const SpacePair& pair, OperatorKind op,
                                      const DiskGrid& grid) {
  if (!(pair.beta > 0.0)) throw HypothesisError("compactness_pointwise: requires beta > 0");
  if (op == OperatorKind::Tg) return pointwise_limit(g.first, pair.beta + 1.0 - pair.alpha, grid, "tg_pointwise_limit");
  return pointwise_limit(g.value, pair.beta - pair.alpha, grid, "sg_pointwise_limit");
}

Verdict sg_compact_to_H0(const SymbolSpec& g) {
  Verdict v;
  v.evidence = {"sg_zero_symbol"};
  bool zero = g.metadata.is_zero;
  if (!zero) {
    zero = true;
    for (double r : {0.0, 0.25, 0.5, 0.75, 0.9, 0.99}) {
      for (int j = 0; j < 16 && zero; ++j) zero = std::abs(g.value(std::polar(r, kTwoPi * j / 16.0))) < 1e-14;
    }
  }
  v.tag = zero ? VerdictTag::Compact : VerdictTag::NotCompact;
  v.reason = zero ? "symbol vanishes" : "nonzero symbol";
  return v;
}

FullIntegral full_radial_integral(const SymbolSpec& g, const LadderConfig& cfg) {
  const Build b = build_ladder(abs_of(g.first), 0.0, 0.0, cfg);
  return full_integral_from(b, g);
}

std::string CriterionReport::verdict_string() const {
  std::string s = to_string(boundedness.tag);
  if (boundedness.tag == VerdictTag::Bounded && compactness.decided()) {
    s += "+";
    s += to_string(compactness.tag);
  }
  return s;
}

namespace {

bool is_boundedness_tag(VerdictTag t) { return t == VerdictTag::Bounded || t == VerdictTag::Unbounded; }

Verdict merge(const std::vector<const CriterionEntry*>& entries, bool& agree) {
  Verdict out;
  std::vector<const Verdict*> decided;
  std::vector<std::string> reasons;
  for (const auto* e : entries) {
    out.evidence.push_back(e->criterion);
    if (e->verdict.decided()) {
      decided.push_back(&e->verdict);
    } else if (!e->verdict.reason.empty()) {
      reasons.push_back(e->criterion + ": " + e->verdict.reason);
    }
  }
  if (decided.empty()) {
    for (std::size_t i = 0; i < reasons.size(); ++i) out.reason += (i ? "; " : "") + reasons[i];
    if (out.reason.empty()) out.reason = "no applicable criterion decided";
    return out;
  }
  const VerdictTag tag = decided.front()->tag;
  for (const auto* d : decided) {
    if (d->tag != tag) {
      agree = false;
      out.reason = "criteria disagree";
      for (const auto* e : entries) {
        if (e->verdict.decided()) out.reason += std::string("; ") + e->criterion + "=" + to_string(e->verdict.tag);
      }
      return out;
    }
  }
  out.tag = tag;
  out.sufficiency_only = std::all_of(decided.begin(), decided.end(), [](const Verdict* d) { return d->sufficiency_only; });
  for (const auto* d : decided) {
    if (d->value) {
      out.value = d->value;
      break;
    }
  }
  out.slope = decided.front()->slope;
  if (out.sufficiency_only) out.reason = decided.front()->reason;
  return out;
}

}  // namespace

CriterionReport classify(const SymbolSpec& g, OperatorKind op, const SpacePair& pair, const ClassifyConfig& cfg) {
  CriterionReport rep;
  rep.symbol = g.name;
  rep.op = op;
  rep.pair = pair;
  const bool origin_pair = pair.alpha == 0.0 && pair.beta == 0.0;

  auto add = [&](std::string name, Verdict v, std::optional<RadialLadder> ladder = std::nullopt,
                 std::vector<double> tail = {}) {
    rep.criteria.push_back({std::move(name), std::move(v), std::move(ladder), std::move(tail)});
  };

  auto tg_boundedness = [&](const SpacePair& p, bool with_compactness) {
    const Build b = build_ladder(abs_of(g.first), p.alpha, p.beta, cfg.ladder);
    add("tg_integral", ladder_verdict(b.ladder, g.metadata.log_deriv_bloch, "tg_integral", "log(g') in the Bloch space"),
        b.ladder);
    if (p.alpha == 0.0 && p.beta == 0.0) add("tg_full_integral", full_integral_from(b, g).verdict);
    if (with_compactness) {
      auto tail = tail_from(b, g.metadata.log_deriv_bloch);
      add("tg_tail", tail.verdict, std::nullopt, tail.inner);
    }
  };

  if (op == OperatorKind::Tg) {
    tg_boundedness(pair, true);
    if (pair.beta > 0.0) {
      add("tg_pointwise", pointwise_Tg(g, pair, cfg.grid).verdict);
      add("tg_pointwise_limit", compactness_pointwise(g, pair, op, cfg.grid).verdict);
    }
  } else {
    if (origin_pair) {
      // S_g and T_g are bounded on H∞_0 together.
      tg_boundedness(pair, false);
      std::vector<const CriterionEntry*> tg;
      for (const auto& e : rep.criteria) tg.push_back(&e);
      bool agree = true;
      Verdict fwd = merge(tg, agree);
      fwd.evidence.insert(fwd.evidence.begin(), "sg_forwarded");
      rep.criteria.clear();
      add("sg_forwarded", fwd);
      rep.forwarded = true;
      rep.cross_check_agreement = agree;
    }
    if (pair.alpha > 0.0) {
      const auto r = boundedness_Sg_integral(g, pair, cfg.ladder);
      add("sg_integral", r.verdict, r.ladder);
    }
    if (pair.beta > 0.0) {
      add("sg_pointwise", pointwise_Sg(g, pair, cfg.grid).verdict);
      add("sg_pointwise_limit", compactness_pointwise(g, pair, op, cfg.grid).verdict);
    } else {
      add("sg_zero_symbol", sg_compact_to_H0(g));
    }
  }

  std::vector<const CriterionEntry*> bounded_entries, compact_entries;
  for (const auto& e : rep.criteria) {
    const bool boundedness_kind = e.criterion == "tg_integral" || e.criterion == "tg_full_integral" ||
                                  e.criterion == "tg_pointwise" || e.criterion == "sg_integral" ||
                                  e.criterion == "sg_pointwise" || e.criterion == "sg_forwarded";
    (boundedness_kind ? bounded_entries : compact_entries).push_back(&e);
  }
  bool agree = rep.cross_check_agreement;
  rep.boundedness = merge(bounded_entries, agree);
  rep.compactness = merge(compact_entries, agree);

  if (rep.boundedness.tag == VerdictTag::Unbounded) {
    if (rep.compactness.tag == VerdictTag::Compact) {
      agree = false;
      rep.boundedness = Verdict{};
      rep.boundedness.reason = "compactness evidence contradicts divergence";
    } else if (!rep.compactness.decided()) {
      rep.compactness.tag = VerdictTag::NotCompact;
      rep.compactness.reason = "unbounded operators are not compact";
    }
  }
  if (!is_boundedness_tag(rep.boundedness.tag) && rep.boundedness.decided()) rep.boundedness = Verdict{};
  rep.cross_check_agreement = agree;
  return rep;
}

}  // namespace volterra
