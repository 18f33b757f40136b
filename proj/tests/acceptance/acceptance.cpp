// Acceptance run: one PASS/FAIL line per criterion with wall time.
//
// Usage: acceptance [--jobs N] [--expect-red ID]...
// Exit status is 0 when every criterion passes, or, with --expect-red, when
// exactly the listed criteria fail and all others pass.

#include "ribbonfn/format.hpp"
#include "ribbonfn/hall_littlewood.hpp"
#include "ribbonfn/identities.hpp"
#include "ribbonfn/operators.hpp"
#include "ribbonfn/oracles.hpp"
#include "ribbonfn/ribbon.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace ribbonfn;

namespace {

struct Outcome {
  bool pass = true;
  // For criteria known to be red: whether the recorded analysis still holds.
  bool analysis_holds = false;
  std::vector<std::string> details;
};

struct Criterion {
  int id;
  std::string title;
  double bound_seconds;  // 0 = no stated bound
  std::function<Outcome()> run;
};

int jobs = 0;

void expect_equal(Outcome& o, const std::string& what, const SymFunc& got, const SymFunc& want) {
  if (got == want) return;
  o.pass = false;
  o.details.push_back(what + ": got " + to_text(got) + ", expected " + to_text(want));
}

Outcome suites_outcome(const std::vector<std::string>& names) {
  Outcome o;
  for (const auto& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const IdentityReport r = run_suite(name, default_bounds(name), jobs);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[256];
    std::snprintf(line, sizeof line, "%-22s %s  %6d cases  %.2fs", name.c_str(), r.passed() ? "ok  " : "FAIL", r.cases,
                  s);
    o.details.emplace_back(line);
    if (!r.passed()) {
      o.pass = false;
      const Failure& f = r.failures.front();
      o.details.push_back("  first failure " + f.identity + " on " + f.input + ": " + f.lhs + " vs " + f.rhs);
    }
  }
  return o;
}

const char* kThreeColumns = "s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]";
const char* kTwoTwoTwo =
    "s[2,2,2] + (q + q^2)*s[3,2,1] + q^3*s[3,3] + q^3*s[4,1,1] + (q^2 + q^3 + q^4)*s[4,2] + (q^4 + q^5)*s[5,1] + "
    "q^6*s[6]";

std::vector<Criterion> criteria() {
  return {
      {1, "Hcol[3](1) and H_(1,1,1) by rows", 1.0,
       [] {
         Outcome o;
         const SymFunc want = parse_symfunc(kThreeColumns);
         expect_equal(o, "Hcol[3](1)", hcol(3)(SymFunc::one()), want);
         expect_equal(o, "hl_build((1,1,1), rows)", hl_build(Partition{1, 1, 1}, HlVia::rows), want);
         return o;
       }},
      {2, "H_(2,2,2) by columns, seven terms", 5.0,
       [] {
         Outcome o;
         expect_equal(o, "hl_build((2,2,2), columns)", hl_build(Partition{2, 2, 2}, HlVia::columns),
                      parse_symfunc(kTwoTwoTwo));
         return o;
       }},
      {3, "ribbon (4,3,2)/(2,1) on s_(3,3,2,2,1)", 5.0,
       [] {
         Outcome o;
         const Ribbon r = ribbon_from_shape(Partition{4, 3, 2});
         o.details.push_back("ribbon encoding R{" + to_string(r) + "}");
         expect_equal(o, "S^R(s_(3,3,2,2,1))", ribbon_op(r)(SymFunc::schur(Partition{3, 3, 2, 2, 1})),
                      parse_symfunc("-s[6,6,5] - s[7,6,4] - s[7,5,5]"));
         return o;
       }},
      {4, "H[m+1] . Hcol[k] = Hcol[k+1] . H[m] on all s_lambda, |lambda| <= 6, m <= 5, k <= 4", 300.0,
       [] {
         Outcome o;
         const IdentityReport full = run_suite("column-commutation-full", Bounds{5, 4, 6}, jobs);
         o.pass = full.passed();
         o.details.push_back("all inputs: " + std::to_string(full.cases) + " cases, " +
                             std::to_string(full.failures.size()) + " failing");
         bool counterexample = false;
         for (const auto& f : full.failures)
           if (f.identity == "column-commutation-full[k=1,m=0]" && f.input == "s[1,1]" && f.lhs == "0" &&
               f.rhs == "q*s[2,2]") {
             counterexample = true;
             o.details.push_back("counterexample " + f.identity + " on " + f.input + ": lhs " + f.lhs + ", rhs " +
                                 f.rhs);
           }
         std::set<std::string> lengths;
         for (const auto& f : full.failures) {
           const auto k_at = f.identity.find("k=");
           const int k = std::atoi(f.identity.c_str() + k_at + 2);
           if (parse_symfunc(f.input).terms().begin()->first.length() <= k) lengths.insert(f.input);
         }
         o.details.push_back("failures with length(lambda) <= k: " + std::to_string(lengths.size()));
         const IdentityReport level = run_suite("column-commutation", Bounds{5, 4, 6}, jobs);
         o.details.push_back(std::string("level-k form (length(lambda) <= k): ") + (level.passed() ? "PASS" : "FAIL") +
                             ", " + std::to_string(level.cases) + " cases");
         o.analysis_holds = counterexample && lengths.empty() && level.passed();
         return o;
       }},
      {5, "H_lambda by rows equals by columns, |lambda| <= 7", 300.0, [] { return suites_outcome({"rows-columns"}); }},
      {6, "Hcol[k](1) = ribbon sum = RSK sum, k <= 6", 60.0,
       [] {
         Outcome o;
         const auto sel = oracles::select_statistic({3, 4});
         if (sel.matching.empty()) {
           o.pass = false;
           o.details.push_back("no RSK statistic matches the ribbon sum");
           return o;
         }
         const auto stat = sel.matching.front();
         o.details.push_back("selected statistic " + stat.name() + " (" + std::to_string(sel.matching.size()) +
                             " of " + std::to_string(sel.report.size()) + " candidates match)");
         for (int k = 1; k <= 6; ++k) {
           const SymFunc col = hcol(k)(SymFunc::one());
           expect_equal(o, "ribbons k=" + std::to_string(k), oracles::h1k_by_ribbons(k), col);
           expect_equal(o, "rsk k=" + std::to_string(k), oracles::h1k_by_rsk(k, stat), col);
         }
         return o;
       }},
      {7, "operator identity suites", 600.0,
       [] {
         return suites_outcome({"involution", "ribbon-right", "ribbon-below", "hat-row", "hat-skew", "column-st2",
                                "ribbon-duality", "st-commutation", "hcol-recursion", "gf-commutation",
                                "column-adding"});
       }},
      {8, "specializations, diagonal, K(1) = SSYT count, triangularity, n <= 6", 0.0,
       [] { return suites_outcome({"specialization"}); }},
      {9, "row/column generator cross-checks, products and skews against LR enumeration", 0.0,
       [] { return suites_outcome({"bernstein", "lr"}); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_red;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else if (a == "--expect-red" && i + 1 < argc) {
      expect_red.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--jobs N] [--expect-red ID]...\n", argv[0]);
      return 2;
    }
  }

  int unexpected = 0;
  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.bound_seconds == 0.0 || s < c.bound_seconds;
    const bool pass = o.pass && in_time;
    char bound[32] = "none";
    if (c.bound_seconds > 0) std::snprintf(bound, sizeof bound, "%.0fs", c.bound_seconds);
    std::printf("%s criterion %d: %s [%.2fs, bound %s]%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), s, bound,
                !in_time ? " (over time)" : "");
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    const bool red_expected = expect_red.count(c.id) > 0;
    const bool ok = red_expected ? !pass && o.analysis_holds : pass;
    if (red_expected)
      std::printf("    expected red: %s\n", ok ? "failure matches the recorded analysis" : "UNEXPECTED");
    if (!ok) ++unexpected;
  }
  if (!expect_red.empty()) std::printf("expected red: %zu criterion(s); unexpected outcomes: %d\n", expect_red.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
