#include "doctest.h"

#include "json.hpp"
#include "reference.hpp"
#include "ribbonfn/format.hpp"
#include "ribbonfn/hall_littlewood.hpp"
#include "ribbonfn/schur.hpp"

using namespace ribbonfn;

TEST_CASE("charge reference sanity") {
  CHECK(ref::charge({1, 2, 3}) == 3);
  CHECK(ref::charge({3, 2, 1}) == 0);
  CHECK(ref::charge({1, 1, 2}) == 1);
}

TEST_CASE("small Hall-Littlewood functions") {
  CHECK(hl_build(Partition{}) == SymFunc::one());
  CHECK(hl_build(Partition{2}) == SymFunc::schur(Partition{2}));
  CHECK(hl_build(Partition{1, 1}) == parse_symfunc("s[1,1] + q*s[2]"));
  CHECK(hl_build(Partition{2, 1}) == parse_symfunc("s[2,1] + q*s[3]"));
}

TEST_CASE("three-column example") {
  const SymFunc expected = parse_symfunc("s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]");
  CHECK(hl_build(Partition{1, 1, 1}, HlVia::rows) == expected);
  CHECK(hl_build(Partition{1, 1, 1}, HlVia::columns) == expected);
}

TEST_CASE("seven-term expansion of shape 2,2,2") {
  const SymFunc expected = parse_symfunc(
      "s[2,2,2] + (q + q^2)*s[3,2,1] + q^3*s[3,3] + q^3*s[4,1,1] + (q^2 + q^3 + q^4)*s[4,2] + "
      "(q^4 + q^5)*s[5,1] + q^6*s[6]");
  CHECK(hl_build(Partition{2, 2, 2}, HlVia::columns) == expected);
  CHECK(hl_build(Partition{2, 2, 2}, HlVia::rows) == expected);
}

TEST_CASE("Kostka-Foulkes polynomials agree with the charge statistic") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        CAPTURE(to_string(lambda));
        CAPTURE(to_string(mu));
        CHECK(kostka_foulkes(lambda, mu) == ref::charge_kostka(mu.parts(), lambda.parts()));
      }
}

TEST_CASE("rows and columns agree") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) CHECK(hl_build(l, HlVia::rows) == hl_build(l, HlVia::columns));
}

TEST_CASE("specializations") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n)) {
      const SymFunc hl = hl_build(l);
      CHECK(hl.at_q(0) == SymFunc::schur(l));
      CHECK(hl.at_q(1) == to_symfunc(h_product_to_schur(l)));
      CHECK(hl.coefficient(l) == QPoly(1));
      for (const auto& [mu, c] : hl.terms()) {
        CHECK(dominates(mu, l));
        CHECK(c.evaluate(1) == ref::kostka_count(mu.parts(), l.parts()));
      }
    }
}

TEST_CASE("kostka table output") {
  const auto table = kostka_table(Partition{2, 1});
  REQUIRE(table.size() == 3);
  CHECK(table[0].first == Partition{1, 1, 1});
  CHECK(table[0].second.is_zero());
  CHECK(table[2].second == q_power(1));
  CHECK(kostka_csv(Partition{2, 1}) ==
        "lambda,mu,kostka_foulkes\n\"2,1\",\"1,1,1\",\"0\"\n\"2,1\",\"2,1\",\"1\"\n\"2,1\",\"3\",\"q\"\n");
  const auto j = nlohmann::json::parse(kostka_json(Partition{1, 1, 1}));
  CHECK(j["lambda"] == nlohmann::json::array({1, 1, 1}));
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][2]["coeff"][0][0] == 3);
  CHECK(kostka_json(Partition{2, 1}) == kostka_json(Partition{2, 1}));
}
