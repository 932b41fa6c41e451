#include "volterra/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "volterra/estimation.hpp"

namespace volterra {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

namespace {

std::string opt_number(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

nlohmann::json opt_json(const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); }

nlohmann::json expected_json(const GroundTruthRow& r) {
  nlohmann::json j;
  j["boundedness"] = r.boundedness ? nlohmann::json(to_string(*r.boundedness)) : nlohmann::json(nullptr);
  j["compactness"] = r.compactness ? nlohmann::json(to_string(*r.compactness)) : nlohmann::json(nullptr);
  j["value"] = opt_json(r.value);
  j["tolerance"] = r.tolerance;
  j["forwarded"] = r.forwarded;
  j["sufficiency_only"] = r.sufficiency_only;
  j["justification"] = r.justification;
  return j;
}

std::string key_of(const GroundTruthRow& r) {
  return r.symbol + "|" + to_string(r.op) + "|" + format_number(r.pair.alpha) + "|" + format_number(r.pair.beta);
}

}  // namespace

Report build_report(const ReportConfig& cfg) {
  Report out;
  std::map<std::string, CriterionReport> classified;
  std::map<double, TestBattery> batteries;

  for (const auto& row : ground_truth_table()) {
    const SymbolSpec* g = find_symbol(row.symbol);
    if (g == nullptr) throw std::invalid_argument("ground truth refers to unknown symbol " + row.symbol);
    const std::string key = key_of(row);
    auto it = classified.find(key);
    if (it == classified.end()) it = classified.emplace(key, classify(*g, row.op, row.pair, cfg.classify)).first;

    ReportRow rr;
    rr.expected = row;
    rr.report = it->second;
    std::string why;
    rr.agree = matches(row, rr.report, &why);
    rr.diagnostics = why;

    auto bit = batteries.find(row.pair.alpha);
    if (bit == batteries.end()) {
      bit = batteries.emplace(row.pair.alpha, standard_battery(row.pair.alpha, kDefaultDegree, cfg.classify.grid)).first;
    }
    rr.lower = empirical_lower_bound(*g, row.op, row.pair, bit->second, cfg.classify.grid);
    if (row.op == OperatorKind::Tg && rr.report.boundedness.tag == VerdictTag::Bounded) {
      try {
        rr.upper = integral_upper_bound(*g, row.pair, cfg.upper_t0, cfg.classify.ladder).refined;
      } catch (const std::exception& e) {
        rr.diagnostics += std::string(rr.diagnostics.empty() ? "" : "; ") + "upper bound unavailable: " + e.what();
      }
    }
    const ProbeTrace probe = compactness_probe(*g, row.op, row.pair, cfg.probe_n, cfg.classify.grid);
    rr.probe_exponent = probe.decay_exponent;

    auto note = [&](const std::string& msg) { rr.diagnostics += (rr.diagnostics.empty() ? "" : "; ") + msg; };
    const double last = probe.values.back();
    if (rr.report.compactness.tag == VerdictTag::Compact && last > 0.0 &&
        last >= 1e-2 && probe.decay_exponent > -0.05) {
      note("probe does not decay although the criteria say Compact");
    }
    if (rr.upper && *rr.lower > *rr.upper + 1e-6) note("lower bound exceeds upper bound");

    if (rr.report.headline() == VerdictTag::Inconclusive) ++out.inconclusive;
    if (!rr.agree) ++out.disagreements;
    out.rows.push_back(std::move(rr));
  }
  return out;
}

int report_exit_code(const Report& report) {
  if (report.disagreements == 0) return 0;
  return report.inconclusive > 0 ? 2 : 1;
}

int classify_exit_code(const CriterionReport& rep) { return rep.headline() == VerdictTag::Inconclusive ? 2 : 0; }

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["tag"] = to_string(v.tag);
  j["value"] = opt_json(v.value);
  j["evidence"] = v.evidence;
  j["reason"] = v.reason;
  j["sufficiency_only"] = v.sufficiency_only;
  j["slope"] = v.slope;
  return j;
}

nlohmann::json to_json(const CriterionReport& rep, bool include_ladders) {
  nlohmann::json j;
  j["symbol"] = rep.symbol;
  j["op"] = to_string(rep.op);
  j["alpha"] = rep.pair.alpha;
  j["beta"] = rep.pair.beta;
  j["verdict"] = rep.verdict_string();
  j["boundedness"] = to_json(rep.boundedness);
  j["compactness"] = to_json(rep.compactness);
  j["forwarded"] = rep.forwarded;
  j["cross_check_agreement"] = rep.cross_check_agreement;
  j["criteria"] = nlohmann::json::array();
  for (const auto& e : rep.criteria) {
    nlohmann::json c;
    c["criterion"] = e.criterion;
    c["verdict"] = to_json(e.verdict);
    if (include_ladders && e.ladder) {
      c["ladder"] = {{"k", e.ladder->k},
                     {"t", e.ladder->t_values},
                     {"values", e.ladder->values},
                     {"argmax_angles", e.ladder->argmax_angles},
                     {"reliable", e.ladder->reliable}};
    }
    if (include_ladders && !e.tail.empty()) c["tail"] = e.tail;
    j["criteria"].push_back(std::move(c));
  }
  return j;
}

nlohmann::json to_json(const Report& report, const ReportConfig& cfg) {
  nlohmann::json j;
  j["config"] = {{"k_max", cfg.classify.ladder.k_max},
                 {"angles", cfg.classify.ladder.angles},
                 {"quad_nodes", cfg.classify.ladder.quad.nodes},
                 {"probe_n", cfg.probe_n},
                 {"upper_t0", cfg.upper_t0}};
  j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = to_json(r.report, false);
    row["value"] = opt_json(r.report.boundedness.value);
    row["lower"] = opt_json(r.lower);
    row["upper"] = opt_json(r.upper);
    row["probe_exp"] = opt_json(r.probe_exponent);
    row["expected"] = expected_json(r.expected);
    row["agree"] = r.agree;
    row["diagnostics"] = r.diagnostics;
    j["rows"].push_back(std::move(row));
  }
  j["summary"] = {{"rows", report.rows.size()},
                  {"disagreements", report.disagreements},
                  {"inconclusive", report.inconclusive}};
  return j;
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    const auto& c = r.report;
    os << c.symbol << ',' << to_string(c.op) << ',' << format_number(c.pair.alpha) << ','
       << format_number(c.pair.beta) << ',' << c.verdict_string() << ',' << opt_number(c.boundedness.value) << ','
       << opt_number(r.lower) << ',' << opt_number(r.upper) << ',' << opt_number(r.probe_exponent) << ','
       << (r.agree ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string to_csv(const CriterionReport& c) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  os << c.symbol << ',' << to_string(c.op) << ',' << format_number(c.pair.alpha) << ',' << format_number(c.pair.beta)
     << ',' << c.verdict_string() << ',' << opt_number(c.boundedness.value) << ",,,,"
     << (c.cross_check_agreement ? "true" : "false") << '\n';
  return os.str();
}

std::string to_text(const CriterionReport& c) {
  std::ostringstream os;
  os << c.symbol << "  " << to_string(c.op) << "  alpha=" << format_number(c.pair.alpha)
     << " beta=" << format_number(c.pair.beta) << '\n';
  os << "  verdict: " << c.verdict_string();
  if (c.boundedness.value) os << "  value=" << format_number(*c.boundedness.value);
  if (c.boundedness.sufficiency_only) os << "  (sufficiency-only)";
  if (c.forwarded) os << "  (forwarded from T_g)";
  os << '\n';
  for (const auto& e : c.criteria) {
    os << "  - " << e.criterion << ": " << to_string(e.verdict.tag);
    if (e.verdict.value) os << " value=" << format_number(*e.verdict.value);
    if (!e.verdict.reason.empty()) os << "  [" << e.verdict.reason << ']';
    os << '\n';
  }
  os << "  cross-check agreement: " << (c.cross_check_agreement ? "yes" : "no") << '\n';
  return os.str();
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-3s %5s %5s  %-22s %12s %12s %12s %10s  %s\n", "symbol", "op", "alpha",
                "beta", "verdict", "value", "lower", "upper", "probe_exp", "agree");
  os << line;
  for (const auto& r : report.rows) {
    const auto& c = r.report;
    std::snprintf(line, sizeof line, "%-12s %-3s %5s %5s  %-22s %12s %12s %12s %10s  %s\n", c.symbol.c_str(),
                  to_string(c.op), format_number(c.pair.alpha).c_str(), format_number(c.pair.beta).c_str(),
                  c.verdict_string().c_str(), opt_number(c.boundedness.value).c_str(), opt_number(r.lower).c_str(),
                  opt_number(r.upper).c_str(), opt_number(r.probe_exponent).c_str(), r.agree ? "yes" : "NO");
    os << line;
    if (!r.diagnostics.empty()) os << "    " << r.diagnostics << '\n';
  }
  os << report.rows.size() << " rows, " << report.disagreements << " disagreements, " << report.inconclusive
     << " inconclusive\n";
  return os.str();
}

nlohmann::json registry_json() {
  nlohmann::json j;
  j["symbols"] = nlohmann::json::array();
  for (const auto& g : registry()) j["symbols"].push_back(symbol_to_json(g));
  j["ground_truth"] = nlohmann::json::array();
  for (const auto& r : ground_truth_table()) {
    nlohmann::json row = expected_json(r);
    row["symbol"] = r.symbol;
    row["op"] = to_string(r.op);
    row["alpha"] = r.pair.alpha;
    row["beta"] = r.pair.beta;
    j["ground_truth"].push_back(std::move(row));
  }
  return j;
}

}  // namespace volterra
