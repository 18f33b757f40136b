#include "ribbonfn/ribbonfn.h"

#include "ribbonfn/expr.hpp"
#include "ribbonfn/format.hpp"
#include "ribbonfn/hall_littlewood.hpp"
#include "ribbonfn/identities.hpp"
#include "ribbonfn/operators.hpp"
#include "ribbonfn/partition.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct rbf_symfunc {
  ribbonfn::SymFunc value;
};

struct rbf_op {
  ribbonfn::ExprPtr expr;
  ribbonfn::LinearOp op;
};

namespace {

thread_local std::string last_error;
thread_local long last_offset = -1;

rbf_status fail(rbf_status s, const std::string& msg, long offset = -1) {
  last_error = msg;
  last_offset = offset;
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
rbf_status guarded(F&& body) {
  last_error.clear();
  last_offset = -1;
  try {
    return body();
  } catch (const ribbonfn::ParseError& e) {
    return fail(RBF_PARSE_ERROR, e.what(), static_cast<long>(e.offset()));
  } catch (const ribbonfn::InvalidInput& e) {
    return fail(RBF_INVALID_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(RBF_INTERNAL, e.what());
  } catch (...) {
    return fail(RBF_INTERNAL, "unknown error");
  }
}

rbf_status null_args() { return fail(RBF_INVALID_INPUT, "null argument"); }

}  // namespace

extern "C" {

const char* rbf_version(void) { return "0.1.0"; }
const char* rbf_last_error(void) { return last_error.c_str(); }
long rbf_last_error_offset(void) { return last_offset; }
void rbf_string_free(char* s) { std::free(s); }
int rbf_max_degree(void) { return ribbonfn::max_degree(); }

rbf_status rbf_symfunc_parse(const char* text, rbf_symfunc** out) {
  if (!text || !out) return null_args();
  return guarded([&] {
    std::string_view t(text);
    const auto first = t.find_first_not_of(" \t\r\n");
    ribbonfn::SymFunc f = first != std::string_view::npos && t[first] == '{' ? ribbonfn::parse_symfunc_json(t)
                                                                               : ribbonfn::parse_symfunc(t);
    *out = new rbf_symfunc{std::move(f)};
    return RBF_OK;
  });
}

void rbf_symfunc_free(rbf_symfunc* f) { delete f; }

rbf_status rbf_symfunc_format(const rbf_symfunc* f, rbf_format fmt, char** out) {
  if (!f || !out) return null_args();
  return guarded([&] {
    switch (fmt) {
      case RBF_FORMAT_TEXT: *out = dup(ribbonfn::to_text(f->value)); break;
      case RBF_FORMAT_JSON: *out = dup(ribbonfn::to_json(f->value)); break;
      case RBF_FORMAT_LATEX: *out = dup(ribbonfn::to_latex(f->value)); break;
      default: return fail(RBF_INVALID_INPUT, "format not available for symmetric functions");
    }
    return RBF_OK;
  });
}

int rbf_symfunc_degree(const rbf_symfunc* f) {
  if (!f || f->value.is_zero()) return -1;
  return f->value.max_degree();
}

rbf_status rbf_op_parse(const char* text, rbf_op** out) {
  if (!text || !out) return null_args();
  return guarded([&] {
    ribbonfn::ExprPtr e = ribbonfn::parse_expr(text);
    ribbonfn::LinearOp op = ribbonfn::build_op(*e);
    *out = new rbf_op{std::move(e), std::move(op)};
    return RBF_OK;
  });
}

void rbf_op_free(rbf_op* op) { delete op; }

int rbf_op_degree_shift(const rbf_op* op) { return op ? op->op.degree_shift() : 0; }

rbf_status rbf_op_format(const rbf_op* op, char** out) {
  if (!op || !out) return null_args();
  return guarded([&] {
    *out = dup(ribbonfn::print_expr(*op->expr));
    return RBF_OK;
  });
}

rbf_status rbf_op_apply(const rbf_op* op, const rbf_symfunc* f, rbf_symfunc** out) {
  if (!op || !f || !out) return null_args();
  return guarded([&] {
    *out = new rbf_symfunc{op->op(f->value)};
    return RBF_OK;
  });
}

rbf_status rbf_hl_build(const char* shape, int via_columns, rbf_symfunc** out) {
  if (!shape || !out) return null_args();
  return guarded([&] {
    const ribbonfn::Partition lambda = ribbonfn::parse_partition(shape);
    if (lambda.size() > ribbonfn::max_degree())
      return fail(RBF_INVALID_INPUT, "degree " + std::to_string(lambda.size()) + " exceeds RIBBONFN_MAX_DEGREE");
    *out = new rbf_symfunc{ribbonfn::hl_build(lambda, via_columns ? ribbonfn::HlVia::columns : ribbonfn::HlVia::rows)};
    return RBF_OK;
  });
}

rbf_status rbf_kostka_table(const char* lambda, rbf_format fmt, char** out) {
  if (!lambda || !out) return null_args();
  return guarded([&] {
    const ribbonfn::Partition p = ribbonfn::parse_partition(lambda);
    if (p.size() > ribbonfn::max_degree())
      return fail(RBF_INVALID_INPUT, "degree " + std::to_string(p.size()) + " exceeds RIBBONFN_MAX_DEGREE");
    switch (fmt) {
      case RBF_FORMAT_CSV: *out = dup(ribbonfn::kostka_csv(p)); break;
      case RBF_FORMAT_JSON: *out = dup(ribbonfn::kostka_json(p)); break;
      default: return fail(RBF_INVALID_INPUT, "kostka tables are CSV or JSON");
    }
    return RBF_OK;
  });
}

rbf_status rbf_verify(const char* suite, int max_m, int max_k, int max_size, int jobs, char** report) {
  if (!suite || !report) return null_args();
  return guarded([&] {
    if (!ribbonfn::has_suite(suite)) return fail(RBF_INVALID_INPUT, std::string("unknown suite: ") + suite);
    if (jobs < 0) return fail(RBF_INVALID_INPUT, "jobs must be non-negative");
    ribbonfn::Bounds b = ribbonfn::default_bounds(suite);
    if (max_m >= 0) b.max_m = max_m;
    if (max_k >= 0) b.max_k = max_k;
    if (max_size >= 0) b.max_size = max_size;
    if (b.max_size > ribbonfn::max_degree())
      return fail(RBF_INVALID_INPUT, "max-size exceeds RIBBONFN_MAX_DEGREE");
    const ribbonfn::IdentityReport r = ribbonfn::run_suite(suite, b, jobs);
    *report = dup(r.to_json());
    if (r.passed()) return RBF_OK;
    return fail(RBF_IDENTITY_FAILURE, std::to_string(r.failures.size()) + " failing case(s) in " + r.suite);
  });
}

rbf_status rbf_suite_list(char** out) {
  if (!out) return null_args();
  return guarded([&] {
    std::string s;
    for (const auto& info : ribbonfn::suites()) s += info.name + "\t" + info.description + "\n";
    *out = dup(s);
    return RBF_OK;
  });
}

}  // extern "C"
