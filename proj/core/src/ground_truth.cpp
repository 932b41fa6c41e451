#include "volterra/ground_truth.hpp"

#include <cmath>

namespace volterra {

namespace {

using V = VerdictTag;

std::vector<GroundTruthRow> build_table() {
  std::vector<GroundTruthRow> t;
  auto row = [&](std::string sym, OperatorKind op, double a, double b) -> GroundTruthRow& {
    GroundTruthRow r;
    r.symbol = std::move(sym);
    r.op = op;
    r.pair = SpacePair(a, b);
    t.push_back(std::move(r));
    return t.back();
  };
  const auto Tg = OperatorKind::Tg;
  const auto Sg = OperatorKind::Sg;

  auto& r1 = row("identity", Tg, 0, 0);
  r1.boundedness = V::Bounded;
  r1.value = 1.0;
  r1.tolerance = 1e-4;
  r1.justification = "sup_theta int_0^1 dr = 1";

  auto& r2 = row("log", Tg, 0, 0);
  r2.boundedness = V::Unbounded;
  r2.justification = "int_0^t dr/(1-r) = -log(1-t) diverges at theta = 0";

  auto& r3 = row("log", Tg, 0, 1);
  r3.boundedness = V::Bounded;
  r3.compactness = V::Compact;
  r3.justification = "(1-t^2) log(1/(1-t)) -> 0 and (1-|z|^2)^2/|1-z| <= 4(1-|z|) -> 0";

  auto& r4 = row("koebe3", Tg, 0, 1);
  r4.boundedness = V::Unbounded;
  r4.justification = "(1-r^2)^2/(1-r)^3 = (1+r)^2/(1-r) -> infinity";

  auto& r5 = row("cayley", Sg, 0, 1);
  r5.boundedness = V::Bounded;
  r5.compactness = V::NotCompact;
  r5.value = 2.0;
  r5.tolerance = 1e-3;
  r5.justification = "(1-r^2)/(1-r) = 1+r -> 2: sup is 2 and the boundary limit is 2, not 0";

  auto& r6 = row("affine", Sg, 1, 0);
  r6.boundedness = V::Unbounded;
  r6.justification = "int_0^1 |1-r e^{i theta}|/(1-r^2)^2 dr diverges";

  auto& r7 = row("affine", Sg, 1, 1);
  r7.boundedness = V::Bounded;
  r7.justification = "sup |1-z| = 2 with weight exponent 0; ladder (1-t^2) int |1-z|/(1-r^2)^2 stays finite";

  auto& r8 = row("zero", Sg, 1, 0);
  r8.compactness = V::Compact;
  r8.justification = "S_g into H∞_0 is compact exactly when g = 0";

  auto& r9 = row("identity", Sg, 0, 0);
  r9.boundedness = V::Bounded;
  r9.forwarded = true;
  r9.justification = "S_g and T_g are bounded on H∞_0 together; T_z is bounded";

  auto& r10 = row("identity", Tg, 0, 0);
  r10.compactness = V::Compact;
  r10.justification = "tail int_{t2}^{t1} dr = t1 - t2 -> 0: the classical Volterra operator is compact";

  auto& r11 = row("koebe2", Tg, 0, 1);
  r11.boundedness = V::Bounded;
  r11.compactness = V::NotCompact;
  r11.justification = "(1-|z|^2)^2/|1-z|^2 -> 4 along the radius to 1: finite, not vanishing";

  auto& r12 = row("half_square", Tg, 0, 0);
  r12.boundedness = V::Bounded;
  r12.value = 0.5;
  r12.tolerance = 1e-4;
  r12.sufficiency_only = true;
  r12.justification = "int_0^1 r dr = 1/2; g'(0) = 0 so only the sufficient direction applies";

  auto& r13 = row("lacunary", Tg, 0, 0);
  r13.boundedness = V::Bounded;
  r13.sufficiency_only = true;
  r13.justification = "g' is a polynomial so the radial integral is finite; log g' membership unknown";

  auto& r14 = row("zero", Tg, 0, 0);
  r14.boundedness = V::Bounded;
  r14.compactness = V::Compact;
  r14.justification = "zero operator";
  return t;
}

}  // namespace

const std::vector<GroundTruthRow>& ground_truth_table() {
  static const std::vector<GroundTruthRow> table = build_table();
  return table;
}

bool matches(const GroundTruthRow& row, const CriterionReport& rep, std::string* why) {
  std::string out;
  auto fail = [&](const std::string& msg) { out += (out.empty() ? "" : "; ") + msg; };
  if (row.boundedness && rep.boundedness.tag != *row.boundedness) {
    fail(std::string("expected ") + to_string(*row.boundedness) + ", got " + to_string(rep.boundedness.tag));
  }
  if (row.compactness && rep.compactness.tag != *row.compactness) {
    fail(std::string("expected ") + to_string(*row.compactness) + ", got " + to_string(rep.compactness.tag));
  }
  if (row.value) {
    if (!rep.boundedness.value || std::abs(*rep.boundedness.value - *row.value) > row.tolerance) {
      fail("value outside tolerance");
    }
  }
  if (row.forwarded && !rep.forwarded) fail("expected a forwarded verdict");
  if (row.sufficiency_only && !rep.boundedness.sufficiency_only) fail("expected a sufficiency-only verdict");
  if (!rep.cross_check_agreement) fail("criteria disagree");
  if (why) *why = out;
  return out.empty();
}

}  // namespace volterra
