#include "commands.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "volterra/estimation.hpp"
#include "volterra/sector.hpp"

namespace volterra::cli {

namespace {

const SymbolSpec& require_symbol(const std::string& name) {
  const SymbolSpec* g = find_symbol(name);
  if (g == nullptr) throw std::invalid_argument("unknown symbol '" + name + "' (see `volterra list`)");
  return *g;
}

SpacePair pair_of(const RunConfig& cfg) { return SpacePair(cfg.alpha, cfg.beta); }

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

std::string complex_text(Complex z) {
  return "(" + format_number(z.real()) + ", " + format_number(z.imag()) + ")";
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, text)");
}

void RunConfig::validate() const {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw std::invalid_argument("alpha and beta must be >= 0");
  if (k_max < 4 || k_max > 40) throw std::invalid_argument("kmax must lie in [4, 40]");
  if (angles < 64 || (angles & (angles - 1)) != 0) throw std::invalid_argument("angles must be a power of two >= 64");
  if (quad_nodes < 2 || quad_nodes > 64) throw std::invalid_argument("quad-nodes must lie in [2, 64]");
  if (degree < 8) throw std::invalid_argument("degree must be >= 8");
  if (n_max < 16) throw std::invalid_argument("nmax must be >= 16");
  if (samples.empty()) throw std::invalid_argument("at least one sample size is required");
}

ClassifyConfig RunConfig::classify_config() const {
  ClassifyConfig c;
  c.ladder.k_max = k_max;
  c.ladder.angles = angles;
  c.ladder.quad.nodes = quad_nodes;
  return c;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const SymbolSpec& g = require_symbol(cfg.symbol);
  const CriterionReport rep = classify(g, parse_operator(cfg.op), pair_of(cfg), cfg.classify_config());
  switch (cfg.format) {
    case Format::Json: emit_json(out, to_json(rep)); break;
    case Format::Csv: out << to_csv(rep); break;
    case Format::Text: out << to_text(rep); break;
  }
  return classify_exit_code(rep);
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  ReportConfig rc;
  rc.classify = cfg.classify_config();
  rc.probe_n = cfg.n_max;
  const Report report = build_report(rc);
  switch (cfg.format) {
    case Format::Json: emit_json(out, to_json(report, rc)); break;
    case Format::Csv: out << to_csv(report); break;
    case Format::Text: out << to_text(report); break;
  }
  return report_exit_code(report);
}

int cmd_norm(const RunConfig& cfg, std::ostream& out) {
  const SymbolSpec& g = require_symbol(cfg.symbol);
  if (!(cfg.alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  const FunctionHandle f = cfg.derivative ? g.derivative_handle() : g.handle();
  const SupNorm n = weighted_sup_norm(f, cfg.alpha, default_grid());
  const std::string of = cfg.derivative ? "g'" : "g";
  switch (cfg.format) {
    case Format::Json:
      emit_json(out, {{"symbol", g.name},
                      {"function", of},
                      {"alpha", cfg.alpha},
                      {"value", n.divergent ? nlohmann::json(nullptr) : nlohmann::json(n.value)},
                      {"grid_value", n.grid_value},
                      {"argmax", {n.argmax.real(), n.argmax.imag()}},
                      {"extrapolated", n.extrapolated},
                      {"divergent", n.divergent}});
      break;
    case Format::Csv:
      out << "symbol,function,alpha,value,grid_value,extrapolated,divergent\n"
          << g.name << ',' << of << ',' << format_number(cfg.alpha) << ','
          << (n.divergent ? std::string("inf") : format_number(n.value)) << ',' << format_number(n.grid_value) << ','
          << (n.extrapolated ? "true" : "false") << ',' << (n.divergent ? "true" : "false") << '\n';
      break;
    case Format::Text:
      out << "||" << of << "||_{H-inf_" << format_number(cfg.alpha) << "} for " << g.name << ": "
          << (n.divergent ? std::string("divergent") : format_number(n.value)) << '\n'
          << "  grid value " << format_number(n.grid_value) << " at " << complex_text(n.argmax)
          << (n.extrapolated ? ", boundary extrapolated" : "") << '\n';
      break;
  }
  return kExitDecided;
}

int cmd_opnorm(const RunConfig& cfg, std::ostream& out) {
  const SymbolSpec& g = require_symbol(cfg.symbol);
  const OperatorKind op = parse_operator(cfg.op);
  const SpacePair pair = pair_of(cfg);
  const ClassifyConfig cc = cfg.classify_config();
  const CriterionReport rep = classify(g, op, pair, cc);
  const TestBattery battery = standard_battery(pair.alpha, cfg.degree, cc.grid);
  const double lower = empirical_lower_bound(g, op, pair, battery, cc.grid);
  std::optional<UpperBound> upper;
  if (op == OperatorKind::Tg && rep.boundedness.tag == VerdictTag::Bounded) {
    upper = integral_upper_bound(g, pair, 0.875, cc.ladder);
  }
  switch (cfg.format) {
    case Format::Json: {
      nlohmann::json j{{"symbol", g.name},  {"op", to_string(op)},         {"alpha", pair.alpha},
                       {"beta", pair.beta}, {"verdict", rep.verdict_string()}, {"lower", lower}};
      j["upper"] = upper ? nlohmann::json{{"m_t0", upper->m_t0}, {"n", upper->n}, {"sum", upper->sum},
                                          {"refined", upper->refined}}
                         : nlohmann::json(nullptr);
      emit_json(out, j);
      break;
    }
    case Format::Csv:
      out << "symbol,op,alpha,beta,verdict,lower,upper\n"
          << g.name << ',' << to_string(op) << ',' << format_number(pair.alpha) << ',' << format_number(pair.beta)
          << ',' << rep.verdict_string() << ',' << format_number(lower) << ','
          << (upper ? format_number(upper->refined) : std::string()) << '\n';
      break;
    case Format::Text:
      out << g.name << "  " << to_string(op) << "  alpha=" << format_number(pair.alpha)
          << " beta=" << format_number(pair.beta) << "  " << rep.verdict_string() << '\n'
          << "  empirical lower bound: " << format_number(lower) << '\n';
      if (upper) {
        out << "  integral upper bound:  " << format_number(upper->refined) << "  (M=" << format_number(upper->m_t0)
            << ", N=" << format_number(upper->n) << ", M+N=" << format_number(upper->sum) << ")\n";
      }
      break;
  }
  return classify_exit_code(rep);
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
  const SymbolSpec& g = require_symbol(cfg.symbol);
  const OperatorKind op = parse_operator(cfg.op);
  const ProbeTrace t = compactness_probe(g, op, pair_of(cfg), cfg.n_max, default_grid());
  switch (cfg.format) {
    case Format::Json:
      emit_json(out, {{"symbol", g.name},
                      {"op", to_string(op)},
                      {"alpha", cfg.alpha},
                      {"beta", cfg.beta},
                      {"n", t.n},
                      {"values", t.values},
                      {"decay_exponent", t.decay_exponent}});
      break;
    case Format::Csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < t.n.size(); ++i) out << t.n[i] << ',' << format_number(t.values[i]) << '\n';
      break;
    case Format::Text:
      out << "probe ||" << to_string(op) << " z^n|| / ||z^n|| for " << g.name << ", n = 1.." << cfg.n_max << '\n';
      for (std::size_t i = 0; i < t.n.size(); ++i) {
        if (t.n[i] <= 8 || (t.n[i] & (t.n[i] - 1)) == 0 || i + 1 == t.n.size()) {
          out << "  n=" << t.n[i] << "  " << format_number(t.values[i]) << '\n';
        }
      }
      out << "  decay exponent: " << format_number(t.decay_exponent) << '\n';
      break;
  }
  return kExitDecided;
}

int cmd_sector(const RunConfig& cfg, std::ostream& out) {
  const double gamma = cfg.gamma, eta = cfg.eta;
  if (!(gamma > 0.0 && gamma < eta && eta < M_PI)) throw std::invalid_argument("sector constant needs 0 < gamma < eta < pi");
  const SectorMap map = build_sector_map(SectorParams(eta, cfg.theta));

  std::vector<double> estimates;
  for (std::size_t s : cfg.samples) estimates.push_back(estimate_C1(gamma, eta, s, cfg.theta));
  bool monotone = true;
  for (std::size_t i = 1; i < estimates.size(); ++i) monotone = monotone && estimates[i] >= estimates[i - 1];
  bool bounded = true;
  for (double e : estimates) bounded = bounded && std::isfinite(e);

  // Rotation sweep at the smallest sample size.
  const std::size_t s0 = cfg.samples.front();
  const double ref = estimate_C1(gamma, eta, s0, 0.0);
  double rotation_dev = 0.0;
  for (int j = 1; j < 8; ++j) {
    rotation_dev = std::max(rotation_dev, std::abs(estimate_C1(gamma, eta, s0, 2.0 * M_PI * j / 8.0) - ref));
  }

  const bool ok = map.center_residual < 1e-10 && map.vertex_residual < 1e-10 && monotone && bounded;
  switch (cfg.format) {
    case Format::Json:
      emit_json(out, {{"gamma", gamma},
                      {"eta", eta},
                      {"theta", cfg.theta},
                      {"samples", cfg.samples},
                      {"estimates", estimates},
                      {"center_residual", map.center_residual},
                      {"vertex_residual", map.vertex_residual},
                      {"rotation_deviation", rotation_dev},
                      {"monotone", monotone},
                      {"bounded", bounded}});
      break;
    case Format::Csv:
      out << "samples,estimate\n";
      for (std::size_t i = 0; i < estimates.size(); ++i) {
        out << cfg.samples[i] << ',' << format_number(estimates[i]) << '\n';
      }
      break;
    case Format::Text:
      out << "sector density constant, gamma=" << format_number(gamma) << " eta=" << format_number(eta)
          << " theta=" << format_number(cfg.theta) << '\n';
      for (std::size_t i = 0; i < estimates.size(); ++i) {
        out << "  " << cfg.samples[i] << " samples: " << format_number(estimates[i]) << '\n';
      }
      out << "  center residual " << format_number(map.center_residual) << ", vertex residual "
          << format_number(map.vertex_residual) << '\n'
          << "  rotation deviation over 8 angles: " << format_number(rotation_dev) << '\n'
          << "  monotone: " << (monotone ? "yes" : "no") << ", bounded: " << (bounded ? "yes" : "no") << '\n';
      break;
  }
  return ok ? kExitDecided : kExitError;
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
  const nlohmann::json j = registry_json();
  switch (cfg.format) {
    case Format::Json: emit_json(out, j); break;
    case Format::Csv:
      out << "name,formula,univalent,log_deriv_bloch,log_symbol_bloch\n";
      for (const auto& g : registry()) {
        out << g.name << ",\"" << g.formula << "\"," << (g.metadata.is_univalent ? "true" : "false") << ','
            << to_string(g.metadata.log_deriv_bloch) << ',' << to_string(g.metadata.log_symbol_bloch) << '\n';
      }
      break;
    case Format::Text:
      for (const auto& g : registry()) {
        out << g.name << "  " << g.formula << "  [log g' Bloch: " << to_string(g.metadata.log_deriv_bloch)
            << ", log g Bloch: " << to_string(g.metadata.log_symbol_bloch) << "]\n";
      }
      break;
  }
  return kExitDecided;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "report") return cmd_report(cfg, out);
    if (cfg.command == "norm") return cmd_norm(cfg, out);
    if (cfg.command == "opnorm") return cmd_opnorm(cfg, out);
    if (cfg.command == "probe") return cmd_probe(cfg, out);
    if (cfg.command == "lemma2") return cmd_sector(cfg, out);
    if (cfg.command == "list") return cmd_list(cfg, out);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
  } catch (const std::exception& e) {
    err << "volterra " << cfg.command << ": " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace volterra::cli
