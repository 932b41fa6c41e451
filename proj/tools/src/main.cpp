#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

using volterra::cli::RunConfig;

namespace {

void add_operator_options(CLI::App* sub, RunConfig& cfg, bool need_symbol) {
  auto* s = sub->add_option("--symbol", cfg.symbol, "Symbol name from the registry");
  if (need_symbol) s->required();
  sub->add_option("--op", cfg.op, "Operator: Tg or Sg")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "Source space exponent")->capture_default_str();
  sub->add_option("--beta", cfg.beta, "Target space exponent")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string format = "text";

  CLI::App app{"Classify Volterra-type operators between weighted spaces of analytic functions"};
  app.set_config("--config", "", "INI file mirroring the flags; [command] sections apply to that command");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--kmax", cfg.k_max, "Outermost ladder rung (t = 1 - 2^-kmax), at most 40")->capture_default_str();
  app.add_option("--angles", cfg.angles, "Angular samples of the ladder sweep (power of two >= 64)")
      ->capture_default_str();
  app.add_option("--quad-nodes", cfg.quad_nodes, "Gauss-Legendre nodes per quadrature cell")->capture_default_str();
  app.add_option("--degree", cfg.degree, "Truncation degree of series pipelines")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify one (symbol, operator, alpha, beta)");
  add_operator_options(classify, cfg, true);

  auto* report = app.add_subcommand("report", "Classify the full ground-truth table with estimation evidence");
  report->add_option("--nmax", cfg.n_max, "Largest monomial degree of the compactness probe")->capture_default_str();

  auto* norm = app.add_subcommand("norm", "Weighted sup norm of a symbol");
  norm->add_option("--symbol", cfg.symbol, "Symbol name")->required();
  norm->add_option("--alpha", cfg.alpha, "Weight exponent")->capture_default_str();
  norm->add_flag("--derivative", cfg.derivative, "Use g' instead of g");

  auto* opnorm = app.add_subcommand("opnorm", "Lower and upper estimates of the operator norm");
  add_operator_options(opnorm, cfg, true);

  auto* probe = app.add_subcommand("probe", "Compactness probe on normalized monomials");
  add_operator_options(probe, cfg, true);
  probe->add_option("--nmax", cfg.n_max, "Largest monomial degree")->capture_default_str();

  auto* lemma2 = app.add_subcommand("lemma2", "Sector-map density constant estimates");
  lemma2->add_option("--gamma", cfg.gamma, "Aperture of the sampled sector")->required();
  lemma2->add_option("--eta", cfg.eta, "Aperture of the mapped sector")->required();
  lemma2->add_option("--theta", cfg.theta, "Direction of the sector axis")->capture_default_str();
  lemma2->add_option("--samples", cfg.samples, "Halton sample sizes")->capture_default_str();

  app.add_subcommand("list", "List the symbol registry and the ground-truth table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : volterra::cli::kExitError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    cfg.format = volterra::cli::parse_format(format);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return volterra::cli::kExitError;
  }

  std::ostringstream buffer;
  const int code = volterra::cli::run(cfg, buffer, std::cerr);
  if (cfg.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "volterra: cannot write " << cfg.out << '\n';
      return volterra::cli::kExitError;
    }
    file << buffer.str();
  }
  return code;
}
