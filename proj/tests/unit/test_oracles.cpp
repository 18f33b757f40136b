#include "doctest.h"

#include "reference.hpp"
#include "ribbonfn/format.hpp"
#include "ribbonfn/operators.hpp"
#include "ribbonfn/oracles.hpp"
#include "ribbonfn/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using namespace ribbonfn;
using namespace ribbonfn::oracles;

TEST_CASE("permutation helpers") {
  CHECK(is_permutation({2, 1, 3}));
  CHECK_FALSE(is_permutation({2, 2, 3}));
  CHECK(descent_set({3, 1, 2}) == std::vector<int>{1});
  CHECK(inverse({2, 3, 1}) == Permutation{3, 1, 2});
  CHECK_THROWS_AS(rsk({1, 1}), InvalidInput);
}

TEST_CASE("rsk") {
  CHECK(rsk_shape({2, 1, 3}) == Partition{2, 1});
  const Tableaux t = rsk({2, 1, 3});
  CHECK(t.insertion == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(t.recording == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(rsk_shape({1, 2, 3, 4}) == Partition{4});
  CHECK(rsk_shape({4, 3, 2, 1}) == Partition{1, 1, 1, 1});
  // Longest increasing subsequence is the first row.
  CHECK(rsk_shape({3, 1, 4, 2, 5})[0] == 3);
}

TEST_CASE("rsk is a bijection onto pairs of standard tableaux") {
  for (int k = 1; k <= 6; ++k) {
    std::map<std::vector<int>, long long> shapes;
    Permutation p(k);
    std::iota(p.begin(), p.end(), 1);
    do shapes[rsk_shape(p).parts()]++;
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& lambda : ref::partitions(k)) {
      const long long f = syt_count(Partition(lambda));
      CHECK(shapes[lambda] == f * f);
    }
  }
}

TEST_CASE("tableau counts") {
  CHECK(ssyt_count(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(syt_count(Partition{3, 2}) == 5);
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : ref::partitions(n))
      for (const auto& m : ref::partitions(n)) CHECK(ssyt_count(Partition(l), Partition(m)) == ref::kostka_count(l, m));
}

TEST_CASE("Littlewood-Richardson enumeration") {
  CHECK(lr_enumerate(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
  CHECK(lr_enumerate(Partition{1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_enumerate(Partition{2}, Partition{1}, Partition{1, 1, 1}) == 0);
  for (const auto& a : partitions_up_to(3))
    for (const auto& b : partitions_up_to(3)) {
      const SymFunc prod = mult(SymFunc::schur(a), SymFunc::schur(b));
      for (const auto& nu : partitions_of(a.size() + b.size()))
        CHECK(prod.coefficient(nu) == QPoly(lr_enumerate(a, b, nu)));
    }
  CHECK(skew_by_enumeration(Partition{3, 2, 1}, Partition{2, 1}) == skew_schur(Partition{3, 2, 1}, Partition{2, 1}));
}

TEST_CASE("column sums from ribbons") {
  CHECK(h1k_by_ribbons(2) == parse_symfunc("s[1,1] + q*s[2]"));
  for (int k = 1; k <= 5; ++k) CHECK(h1k_by_ribbons(k) == hcol(k)(SymFunc::one()));
}

TEST_CASE("statistic selection") {
  const StatisticSelection sel = select_statistic({3, 4});
  CHECK(sel.report.size() == statistic_candidates().size());
  REQUIRE_FALSE(sel.matching.empty());
  for (const auto& s : sel.matching) {
    CHECK(s.domain == PermDomain::involutions);
    CHECK(s.stat == PermStat::comaj);
  }
  const RskStatistic chosen = sel.matching.front();
  CHECK(chosen.name() == "involutions/comaj/word");
  for (int k = 1; k <= 6; ++k) CHECK(h1k_by_rsk(k, chosen) == h1k_by_ribbons(k));
  CHECK(h1k_by_rsk(3, {PermDomain::all, PermSource::word, PermStat::comaj}) != h1k_by_ribbons(3));
  CHECK_THROWS_AS(h1k_by_rsk(10, chosen), InvalidInput);
}
