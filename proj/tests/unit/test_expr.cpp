#include "doctest.h"

#include "ribbonfn/expr.hpp"
#include "ribbonfn/format.hpp"

using namespace ribbonfn;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string_view::npos;
}

}  // namespace

TEST_CASE("grammar shapes") {
  const ExprPtr e = parse_expr("hat(R{3:{1,2}} . S[1])");
  CHECK(e->kind == OpExpr::Kind::hat);
  REQUIRE(e->args.size() == 1);
  const OpExpr& inner = *e->args[0];
  CHECK(inner.kind == OpExpr::Kind::compose);
  CHECK(inner.args[0]->kind == OpExpr::Kind::ribbon);
  CHECK(*inner.args[0]->ribbon == Ribbon(3, {1, 2}));
  CHECK(inner.args[1]->kind == OpExpr::Kind::row);
  CHECK(inner.args[1]->index == 1);
}

TEST_CASE("precedence and scalars") {
  const ExprPtr e = parse_expr("S[1] . S[2] + q^2 * St[1] . St[2]");
  CHECK(e->kind == OpExpr::Kind::sum);
  CHECK(e->args[0]->kind == OpExpr::Kind::compose);
  CHECK(e->args[1]->kind == OpExpr::Kind::compose);
  CHECK(e->args[1]->args[0]->kind == OpExpr::Kind::scale);
  const ExprPtr s = parse_expr("(q+1) * H[-1]");
  CHECK(s->kind == OpExpr::Kind::scale);
  CHECK(s->scalar == parse_qpoly("1 + q"));
  CHECK(s->args[0]->index == -1);
  CHECK(parse_expr("(S[1] + S[1])")->kind == OpExpr::Kind::sum);
  CHECK(parse_expr("-S[1]")->kind == OpExpr::Kind::scale);
  CHECK(parse_expr("perp(s[1] + s[2]) . mul(s[1])")->args[0]->sym == parse_symfunc("s[1] + s[2]"));
  CHECK(parse_expr("Hcol[3]")->kind == OpExpr::Kind::hcol);
  CHECK(parse_expr("omegaConj(St[0])")->kind == OpExpr::Kind::omega_conj);
}

TEST_CASE("syntax errors report byte offsets") {
  CHECK(error_offset("S[1") == 3);
  CHECK(error_offset("S[1] +") == 6);
  CHECK(error_offset("X[1]") == 0);
  CHECK(error_offset("hat(S[1]") == 8);
  CHECK(error_offset("S[1] S[2]") == 5);
  CHECK(error_offset("q S[1]") == 2);
  CHECK(error_offset("R{3:{1,2}") == 9);
  CHECK_THROWS_AS(parse_expr("R{3:{3}}"), InvalidInput);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("print then parse is the identity") {
  const char* inputs[] = {
      "S[1]",
      "St[-2] . H[3]",
      "S[1] + S[2] . S[3]",
      "(S[1] + S[2]) . S[3]",
      "S[1] . (S[2] . S[3])",
      "S[1] - q * S[1]",
      "(1 - q) * H[2] + q^3 * (St[1] . St[2])",
      "hat(hat(S[1]) . S[2])",
      "omegaConj(R{4:{1,3}}) + R{4:{}}",
      "perp(s[1,1] + (q+q^2)*s[2]) . mul(2*s[1])",
      "-(-Hcol[2])",
      "2 * q * S[0]",
  };
  for (const char* text : inputs) {
    CAPTURE(text);
    const ExprPtr e = parse_expr(text);
    const std::string printed = print_expr(*e);
    const ExprPtr again = parse_expr(printed);
    CHECK(*again == *e);
    CHECK(print_expr(*again) == printed);
  }
  CHECK(print_expr(*parse_expr("S[1].S[2]+q^2*St[1]")) == "S[1] . S[2] + q^2 * St[1]");
  CHECK(print_expr(*parse_expr("(S[1]+S[2]).S[3]")) == "(S[1] + S[2]) . S[3]");
}

TEST_CASE("built operators evaluate") {
  const LinearOp op = build_op(*parse_expr("R{6:{2,4}}"));
  CHECK(op(parse_symfunc("s[3,3,2,2,1]")) == parse_symfunc("-s[6,6,5] - s[7,6,4] - s[7,5,5]"));
  const LinearOp chain = build_op(*parse_expr("H[1] . H[1] . H[1]"));
  CHECK(chain(SymFunc::one()) == parse_symfunc("s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]"));
  const LinearOp diff = build_op(*parse_expr("S[2] - S[2]"));
  CHECK(diff(parse_symfunc("s[2,1]")).is_zero());
  CHECK_THROWS_AS(build_op(*parse_expr("S[1] + S[2]")), InvalidInput);
}
