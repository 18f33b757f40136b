#include "doctest.h"

#include "json.hpp"
#include "ribbonfn/identities.hpp"

#include <set>

using namespace ribbonfn;

TEST_CASE("suite registry") {
  std::set<std::string> names;
  for (const auto& s : suites()) {
    CHECK(names.insert(s.name).second);
    CHECK_FALSE(s.description.empty());
    CHECK(has_suite(s.name));
  }
  for (const char* required : {"column-commutation", "column-adding", "column-st2", "gf-commutation", "commutation-steps", "involution", "ribbon-right",
                               "ribbon-below", "hat-row", "hat-skew", "ribbon-duality", "st-commutation", "hcol-recursion", "bernstein",
                               "hat-gate", "rows-columns", "specialization", "oracles", "lr", "schur"})
    CHECK(names.count(required) == 1);
  CHECK_FALSE(has_suite("nope"));
  CHECK_THROWS_AS(suite_cases("nope", Bounds{}), InvalidInput);
}

TEST_CASE("small runs pass and serialize") {
  const IdentityReport r = run_suite("column-commutation", Bounds{2, 2, 4}, 2);
  CHECK(r.passed());
  CHECK(r.cases > 0);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "column-commutation");
  CHECK(j["bounds"]["max_m"] == 2);
  CHECK(j["cases"] == r.cases);
  CHECK(j["failures"].empty());
}

TEST_CASE("reports do not depend on the thread count") {
  const Bounds b{1, 1, 3};
  const std::string one = run_suite("column-commutation-full", b, 1).to_json();
  const std::string many = run_suite("column-commutation-full", b, 4).to_json();
  CHECK(one == many);
}

TEST_CASE("full-operator form of the commutation fails on one-column inputs") {
  const IdentityReport r = run_suite("column-commutation-full", Bounds{0, 1, 2}, 1);
  REQUIRE_FALSE(r.passed());
  bool found = false;
  for (const auto& f : r.failures) {
    CHECK(f.identity.rfind("column-commutation-full", 0) == 0);
    if (f.identity == "column-commutation-full[k=1,m=0]" && f.input == "s[1,1]") {
      CHECK(f.lhs == "0");
      CHECK(f.rhs == "q*s[2,2]");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("suite cases are deterministic") {
  const auto a = suite_cases("ribbon-right", Bounds{0, 3, 4});
  const auto b = suite_cases("ribbon-right", Bounds{0, 3, 4});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identity == b[i].identity);
    CHECK(a[i].input == b[i].input);
  }
}
