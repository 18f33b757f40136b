#include "doctest.h"

#include "json.hpp"
#include "ribbonfn/format.hpp"
#include "ribbonfn/hall_littlewood.hpp"
#include "ribbonfn/qpoly.hpp"
#include "ribbonfn/schur.hpp"

using namespace ribbonfn;

namespace {

QPoly poly(std::initializer_list<std::pair<int, long long>> t) {
  std::vector<QPoly::Term> v;
  for (auto [e, c] : t) v.emplace_back(e, BigInt(c));
  return QPoly::from_terms(std::move(v));
}

}  // namespace

TEST_CASE("qpoly arithmetic") {
  const QPoly a = poly({{0, 1}, {1, 1}});
  CHECK(a * a == poly({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(a - a == QPoly());
  CHECK((a * poly({{0, 1}, {1, -1}})) == poly({{0, 1}, {2, -1}}));
  CHECK(to_text(poly({{1, 1}, {2, 1}})) == "q + q^2");
  CHECK(to_text(poly({{0, 1}, {3, -2}})) == "1 - 2*q^3");
  CHECK(to_text(QPoly()) == "0");
  BigInt big = 1;
  for (int i = 0; i < 40; ++i) big *= 10;
  CHECK(to_text(QPoly::monomial(big, 0)) == "1" + std::string(40, '0'));
}

TEST_CASE("symfunc text form") {
  SymFunc f;
  f.add_term(Partition{3}, q_power(3));
  f.add_term(Partition{2, 1}, poly({{1, 1}, {2, 1}}));
  f.add_term(Partition{1, 1, 1}, QPoly(1));
  CHECK(to_text(f) == "s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]");
  CHECK(to_text(SymFunc()) == "0");
  CHECK(to_text(SymFunc::one()) == "s[]");
  CHECK(to_text(SymFunc::schur(Partition{2}, QPoly(-1))) == "-s[2]");
  CHECK(to_text(SymFunc::schur(Partition{2}, QPoly(-3))) == "-3*s[2]");
  CHECK(to_text(SymFunc::schur(Partition{2}, poly({{0, -1}, {1, 1}}))) == "(-1 + q)*s[2]");
}

TEST_CASE("symfunc latex form") {
  SymFunc f = SymFunc::schur(Partition{2, 1}, poly({{1, 1}, {2, 1}}));
  f.add_term(Partition{}, QPoly(1));
  CHECK(to_latex(f) == "s_{\\varnothing} + (q + q^{2}) s_{2,1}");
}

TEST_CASE("parser accepts the documented literal forms") {
  const SymFunc f = parse_symfunc("s[2,1] + (q+q^2)*s[3]");
  CHECK(f.size() == 2);
  CHECK(f.coefficient(Partition{3}) == poly({{1, 1}, {2, 1}}));
  CHECK(parse_symfunc("  s [ 2 , 1 ]") == SymFunc::schur(Partition{2, 1}));
  CHECK(parse_symfunc("0").is_zero());
  CHECK(parse_symfunc("s[]") == SymFunc::one());
  CHECK(parse_symfunc("-s[1] + s[1]").is_zero());
  CHECK(parse_symfunc("s[1]*s[1]") == parse_symfunc("s[2] + s[1,1]"));
  CHECK(parse_symfunc("2*q^2*s[1]") == SymFunc::schur(Partition{1}, poly({{2, 2}})));
  CHECK(parse_qpoly("1 + q") == poly({{0, 1}, {1, 1}}));
}

TEST_CASE("parser errors carry offsets") {
  try {
    parse_symfunc("s[2,1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse_symfunc("s[2,1] +"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("s[2,1] )"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("x"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("s[1,2]"), InvalidInput);
  CHECK_THROWS_AS(parse_qpoly("s[1]"), ParseError);
}

TEST_CASE("text round trip on computed values") {
  for (const auto& lambda : partitions_up_to(5)) {
    const SymFunc f = hl_build(lambda);
    CHECK(parse_symfunc(to_text(f)) == f);
    CHECK(parse_symfunc_json(to_json(f)) == f);
  }
  const SymFunc g = parse_symfunc("-3*s[2] + (2 - q^5)*s[1,1] + 7");
  CHECK(parse_symfunc(to_text(g)) == g);
}

TEST_CASE("json form is canonical and schema shaped") {
  SymFunc f = SymFunc::schur(Partition{3, 2, 1}, poly({{0, 1}, {2, -3}}));
  CHECK(to_json(f) == R"({"basis":"schur","terms":[{"index":[3,2,1],"coeff":[[0,"1"],[2,"-3"]]}]})");
  CHECK(to_json(SymFunc()) == R"({"basis":"schur","terms":[]})");
  const auto j = nlohmann::json::parse(to_json(hl_build(Partition{2, 1, 1})));
  CHECK(j["basis"] == "schur");
  CHECK(j["terms"].is_array());
  for (const auto& t : j["terms"]) {
    CHECK(t["index"].is_array());
    for (const auto& c : t["coeff"]) CHECK(c[1].is_string());
  }
  // Same value built in a different order prints identically.
  SymFunc a, b;
  a.add_term(Partition{2}, QPoly(1));
  a.add_term(Partition{1, 1}, QPoly(2));
  b.add_term(Partition{1, 1}, QPoly(2));
  b.add_term(Partition{2}, QPoly(1));
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("json input errors") {
  CHECK_THROWS_AS(parse_symfunc_json("{"), ParseError);
  CHECK_THROWS(parse_symfunc_json(R"({"basis":"h","terms":[]})"));
  CHECK_THROWS(parse_symfunc_json(R"({"basis":"schur","terms":[{"index":[1,2],"coeff":[[0,"1"]]}]})"));
}
