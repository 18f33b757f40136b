#pragma once

// Named verification suites. Each suite expands into a deterministic list of
// cases; a case evaluates both sides of one identity on one input.

#include "ribbonfn/symfunc.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ribbonfn {

struct Bounds {
  int max_m = 4;
  int max_k = 3;
  int max_size = 5;
};

struct Failure {
  std::string identity;
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string suite;
  Bounds bounds;
  int cases = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
};

struct CaseValue {
  SymFunc lhs;
  SymFunc rhs;
  std::string where;  // optional locator appended to the failure input
  CaseValue() = default;
  CaseValue(std::pair<SymFunc, SymFunc> p) : lhs(std::move(p.first)), rhs(std::move(p.second)) {}  // NOLINT
};

struct IdentityCase {
  std::string identity;
  std::string input;
  std::function<CaseValue()> eval;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  Bounds defaults;
};

/// Registered suites in listing order.
const std::vector<SuiteInfo>& suites();
bool has_suite(const std::string& name);
/// Bounds used when the caller passes none (the acceptance bounds).
Bounds default_bounds(const std::string& name);

/// Expands a suite into its cases without running them. Throws InvalidInput
/// for an unknown suite name.
std::vector<IdentityCase> suite_cases(const std::string& name, const Bounds& b, std::vector<std::string>* notes = nullptr);

/// Runs every case on `jobs` worker threads (0 = hardware concurrency).
/// Failures are reported in case order regardless of scheduling.
IdentityReport run_suite(const std::string& name, const Bounds& b, int jobs = 0);

}  // namespace ribbonfn
