#include "doctest.h"

#include "ribbonfn/format.hpp"
#include "ribbonfn/operators.hpp"
#include "ribbonfn/schur.hpp"

using namespace ribbonfn;

namespace {

SymFunc chain(const std::vector<LinearOp>& ops) {
  SymFunc f = SymFunc::one();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) f = (*it)(f);
  return f;
}

void check_equal_up_to(const LinearOp& a, const LinearOp& b, int max_size) {
  for (const auto& l : partitions_up_to(max_size)) {
    CAPTURE(to_string(l));
    CHECK(a.on_basis(l) == b.on_basis(l));
  }
}

}  // namespace

TEST_CASE("row operators build Schur functions") {
  for (const auto& l : partitions_up_to(6)) {
    std::vector<LinearOp> ops;
    for (int p : l.parts()) ops.push_back(bernstein_row(p));
    CHECK(chain(ops) == SymFunc::schur(l));
  }
}

TEST_CASE("column operators build Schur functions") {
  for (const auto& l : partitions_up_to(6)) {
    std::vector<LinearOp> ops;
    const Partition cols = conjugate(l);
    for (int p : cols.parts()) ops.push_back(bernstein_col(p));
    CHECK(chain(ops) == SymFunc::schur(l));
  }
}

TEST_CASE("row operators on small inputs") {
  CHECK(bernstein_row(2)(SymFunc::schur(Partition{1})) == SymFunc::schur(Partition{2, 1}));
  CHECK(bernstein_row(1)(SymFunc::schur(Partition{1})) == SymFunc::schur(Partition{1, 1}));
  CHECK(bernstein_row(0)(SymFunc::schur(Partition{1})).is_zero());
  CHECK(bernstein_row(-1)(SymFunc::schur(Partition{1})) == SymFunc::schur(Partition{}, QPoly(-1)));
}

TEST_CASE("observed action of the zeroth column operator") {
  CHECK(bernstein_col(0)(SymFunc::one()) == SymFunc::one());
  CHECK(bernstein_col(0)(SymFunc::schur(Partition{1})).is_zero());
  CHECK(bernstein_col(0)(SymFunc::schur(Partition{1, 1})) == SymFunc::schur(Partition{2}, QPoly(-1)));
}

TEST_CASE("column operator relations") {
  for (int a = -1; a <= 3; ++a)
    for (int b = -1; b <= 3; ++b) {
      const LinearOp lhs = compose(bernstein_col(a), bernstein_col(b));
      const LinearOp rhs = scale(QPoly(-1), compose(bernstein_col(b - 1), bernstein_col(a + 1)));
      check_equal_up_to(lhs, rhs, 4);
    }
  for (int a = 0; a <= 3; ++a)
    for (const auto& l : partitions_up_to(4))
      CHECK(compose(bernstein_col(a), bernstein_col(a + 1)).on_basis(l).is_zero());
}

TEST_CASE("series forms agree with the finite formulas") {
  for (int m = -3; m <= 3; ++m) {
    check_equal_up_to(bernstein_row(m), bernstein_row_series(m), 4);
    check_equal_up_to(bernstein_col(m), bernstein_col_series(m), 4);
    check_equal_up_to(jing_row(m), jing_row_hooks(m), 4);
    check_equal_up_to(bernstein_col(m), omega_conj(bernstein_row(m)), 4);
  }
}

TEST_CASE("Jing operator specializations") {
  for (int m = 0; m <= 3; ++m)
    for (const auto& l : partitions_up_to(4)) {
      const SymFunc v = jing_row(m).on_basis(l);
      CHECK(v.at_q(0) == bernstein_row(m).on_basis(l));
      CHECK(v.at_q(1) == mul_h(m, SymFunc::schur(l)));
    }
  CHECK(jing_row(1)(jing_row(1)(SymFunc::one())) == parse_symfunc("s[1,1] + q*s[2]"));
}

TEST_CASE("ribbon (4,3,2)/(2,1) on s_(3,3,2,2,1)") {
  const LinearOp r = ribbon_op(Ribbon(6, {2, 4}));
  CHECK(r(SymFunc::schur(Partition{3, 3, 2, 2, 1})) == parse_symfunc("-s[6,6,5] - s[7,6,4] - s[7,5,5]"));
  CHECK(r.degree_shift() == 6);
}

TEST_CASE("single-row and single-column ribbons") {
  for (const auto& l : partitions_up_to(4)) {
    CHECK(ribbon_op(Ribbon(1, {})).on_basis(l) == bernstein_col(1).on_basis(l));
    CHECK(ribbon_op(Ribbon(3, {1, 2})).on_basis(l) == bernstein_col(3).on_basis(l));
  }
}

TEST_CASE("column-adding operator") {
  CHECK(hcol(3)(SymFunc::one()) == parse_symfunc("s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]"));
  CHECK(hcol(1)(SymFunc::one()) == SymFunc::schur(Partition{1}));
  CHECK(hcol(0).key() == bernstein_col(0).key());
  for (int k = 1; k <= 4; ++k) check_equal_up_to(hcol(k), hcol(k, HcolMode::recursive), 4);
  for (int k = 0; k <= 5; ++k) CHECK(hcol(k)(SymFunc::one()).at_q(1) == to_symfunc(h_product_to_schur(Partition(std::vector<int>(k, 1)))));
}

TEST_CASE("hat") {
  for (int m = -1; m <= 2; ++m) {
    check_equal_up_to(hat(hat(bernstein_row(m))), bernstein_row(m), 4);
    check_equal_up_to(hat(hat(bernstein_col(m))), bernstein_col(m), 4);
  }
  // hat(id) keeps constants and kills everything else.
  CHECK(hat(identity_op()).on_basis(Partition{}) == SymFunc::one());
  for (const auto& l : partitions_up_to(5))
    if (!l.empty()) CHECK(hat(identity_op()).on_basis(l).is_zero());
  const SymFunc via_series = hat_translation("S", 1, Partition{2, 1});
  CHECK(via_series == hat(bernstein_row(1)).on_basis(Partition{2, 1}));
}

TEST_CASE("combinators") {
  const LinearOp a = bernstein_row(2);
  const LinearOp b = bernstein_row(1);
  CHECK_THROWS_AS(add(a, b), InvalidInput);
  CHECK(compose(a, b).degree_shift() == 3);
  const SymFunc f = parse_symfunc("s[1] + q*s[2]");
  CHECK(add(a, scale(q_power(1), a))(f) == a(f) + a(f).scaled(q_power(1)));
  CHECK(subtract(a, a)(f).is_zero());
  CHECK(perp_op(h(1))(SymFunc::schur(Partition{2, 1})) == parse_symfunc("s[2] + s[1,1]"));
  CHECK(mul_op(h(1))(SymFunc::one()) == h(1));
  CHECK_THROWS_AS(mul_op(parse_symfunc("s[1] + s[2]")), InvalidInput);
  CHECK(compose(a, b).key() == "(S[2] . S[1])");
}

TEST_CASE("homogeneity and declared shifts") {
  const std::vector<LinearOp> ops{bernstein_row(2), bernstein_col(-1), jing_row(3), ribbon_op(Ribbon(3, {1})),
                                  hcol(2), hat(bernstein_row(1)), omega_conj(jing_row(1))};
  for (const auto& op : ops)
    for (const auto& l : partitions_up_to(4)) {
      const SymFunc v = op.on_basis(l);
      if (v.is_zero()) continue;
      CHECK(v.homogeneous_degree() == l.size() + op.degree_shift());
    }
}

TEST_CASE("k-level equality reports a witness") {
  const KLevelResult same = k_level_equal(hcol(2), hcol(2, HcolMode::recursive), 2, 4);
  CHECK(same.equal);
  CHECK(same.cases > 0);
  const KLevelResult diff = k_level_equal(bernstein_row(1), jing_row(1), 1, 3);
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.witness);
  CHECK(diff.witness->length() <= 1);
}

TEST_CASE("degree guard") {
  CHECK(max_degree() >= 1);
  const Partition big(std::vector<int>{max_degree() + 1});
  CHECK_THROWS_AS(bernstein_row(0).on_basis(big), InvalidInput);
  CHECK_THROWS_AS(bernstein_row(1).on_basis(Partition(std::vector<int>{max_degree()})), InvalidInput);
}
