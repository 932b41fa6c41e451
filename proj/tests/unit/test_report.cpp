#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "volterra/ground_truth.hpp"
#include "volterra/report.hpp"

using namespace volterra;

TEST_SUITE("report") {
  TEST_CASE("every ground-truth row is reproduced by classify") {
    for (const auto& row : ground_truth_table()) {
      CAPTURE(row.symbol);
      CAPTURE(to_string(row.op));
      CAPTURE(row.pair.alpha);
      CAPTURE(row.pair.beta);
      const CriterionReport rep = classify(*find_symbol(row.symbol), row.op, row.pair);
      std::string why;
      CHECK_MESSAGE(matches(row, rep, &why), why);
    }
  }

  TEST_CASE("matches rejects wrong verdicts") {
    const GroundTruthRow& row = ground_truth_table().front();
    CriterionReport rep = classify(*find_symbol(row.symbol), row.op, row.pair);
    REQUIRE(matches(row, rep));
    CriterionReport flipped = rep;
    flipped.boundedness.tag = VerdictTag::Unbounded;
    std::string why;
    CHECK_FALSE(matches(row, flipped, &why));
    CHECK_FALSE(why.empty());
    CriterionReport off = rep;
    off.boundedness.value = *rep.boundedness.value + 1.0;
    CHECK_FALSE(matches(row, off));
  }

  TEST_CASE("exit codes") {
    Report r;
    CHECK(report_exit_code(r) == 0);
    r.disagreements = 1;
    CHECK(report_exit_code(r) == 1);
    r.inconclusive = 1;
    CHECK(report_exit_code(r) == 2);
    CriterionReport c;
    CHECK(classify_exit_code(c) == 2);
    c.boundedness.tag = VerdictTag::Unbounded;
    CHECK(classify_exit_code(c) == 0);
  }

  TEST_CASE("csv header is frozen") {
    CHECK(std::string(kCsvHeader) == "symbol,op,alpha,beta,verdict,value,lower,upper,probe_exp,agree");
    const std::string csv = to_csv(Report{});
    CHECK(csv == std::string(kCsvHeader) + "\n");
  }

  TEST_CASE("verdict strings") {
    CriterionReport c;
    c.boundedness.tag = VerdictTag::Bounded;
    CHECK(c.verdict_string() == "Bounded");
    c.compactness.tag = VerdictTag::NotCompact;
    CHECK(c.verdict_string() == "Bounded+NotCompact");
    c.boundedness.tag = VerdictTag::Unbounded;
    CHECK(c.verdict_string() == "Unbounded");
  }

  TEST_CASE("number formatting") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  }

  TEST_CASE("classify json carries every criterion") {
    const CriterionReport rep = classify(*find_symbol("log"), OperatorKind::Tg, {0.0, 1.0});
    const nlohmann::json j = to_json(rep);
    CHECK(j.at("verdict") == "Bounded+Compact");
    CHECK(j.at("criteria").size() == rep.criteria.size());
    CHECK(j.at("criteria").at(0).contains("ladder"));
    CHECK_FALSE(to_json(rep, false).at("criteria").at(0).contains("ladder"));
  }

  TEST_CASE("registry listing") {
    const nlohmann::json j = registry_json();
    CHECK(j.at("symbols").size() == registry().size());
    CHECK(j.at("ground_truth").size() == ground_truth_table().size());
  }
}

TEST_SUITE("cli") {
  using cli::RunConfig;

  int run(const RunConfig& cfg, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = cli::run(cfg, o, e);
    if (out) *out = o.str();
    return code;
  }

  TEST_CASE("classify exit codes") {
    RunConfig cfg;
    cfg.command = "classify";
    cfg.symbol = "log";
    std::string out;
    CHECK(run(cfg, &out) == 0);
    CHECK(out.find("Unbounded") != std::string::npos);

    cfg.symbol = "zero";
    cfg.op = "Sg";
    cfg.alpha = 1.0;
    CHECK(run(cfg, &out) == 0);
    CHECK(out.find("Compact") != std::string::npos);

    cfg.symbol = "nosuch";
    CHECK(run(cfg) == 1);
  }

  TEST_CASE("run config validation") {
    RunConfig cfg;
    cfg.command = "list";
    CHECK(run(cfg) == 0);
    cfg.k_max = 41;
    CHECK(run(cfg) == 1);
    cfg.k_max = 40;
    cfg.angles = 96;
    CHECK(run(cfg) == 1);
    cfg.angles = 32;
    CHECK(run(cfg) == 1);
    cfg.angles = 512;
    cfg.alpha = -1.0;
    CHECK(run(cfg) == 1);
    cfg.alpha = 0.0;
    cfg.command = "bogus";
    CHECK(run(cfg) == 1);
  }

  TEST_CASE("sector subcommand") {
    RunConfig cfg;
    cfg.command = "lemma2";
    cfg.gamma = 0.785;
    cfg.eta = 1.571;
    cfg.samples = {1000, 10000};
    CHECK(run(cfg) == 0);
    cfg.gamma = 1.6;
    CHECK(run(cfg) == 1);
  }

  TEST_CASE("format parsing") {
    CHECK(cli::parse_format("json") == cli::Format::Json);
    CHECK(cli::parse_format("csv") == cli::Format::Csv);
    CHECK(cli::parse_format("text") == cli::Format::Text);
    CHECK_THROWS(cli::parse_format("xml"));
  }
}
