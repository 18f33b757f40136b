#include "ribbonfn/ribbonfn.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

struct StringDeleter {
  void operator()(char* s) const { rbf_string_free(s); }
};
struct SymDeleter {
  void operator()(rbf_symfunc* f) const { rbf_symfunc_free(f); }
};
struct OpDeleter {
  void operator()(rbf_op* op) const { rbf_op_free(op); }
};
using String = std::unique_ptr<char, StringDeleter>;
using Sym = std::unique_ptr<rbf_symfunc, SymDeleter>;
using Op = std::unique_ptr<rbf_op, OpDeleter>;

int report_error(rbf_status s, const std::string& context) {
  std::cerr << "ribbonfn: " << context << ": " << rbf_last_error() << "\n";
  return static_cast<int>(s);
}

const std::map<std::string, rbf_format> kSymFormats{
    {"text", RBF_FORMAT_TEXT}, {"json", RBF_FORMAT_JSON}, {"latex", RBF_FORMAT_LATEX}};

int print_symfunc(const rbf_symfunc* f, rbf_format fmt) {
  char* raw = nullptr;
  if (rbf_status s = rbf_symfunc_format(f, fmt, &raw); s != RBF_OK) return report_error(s, "format");
  String out(raw);
  std::cout << out.get() << "\n";
  return 0;
}

int cmd_apply(const std::string& op_text, const std::string& to, rbf_format fmt) {
  rbf_op* op_raw = nullptr;
  if (rbf_status s = rbf_op_parse(op_text.c_str(), &op_raw); s != RBF_OK) return report_error(s, "--op");
  Op op(op_raw);
  rbf_symfunc* in_raw = nullptr;
  if (rbf_status s = rbf_symfunc_parse(to.c_str(), &in_raw); s != RBF_OK) return report_error(s, "--to");
  Sym in(in_raw);
  const int out_degree = rbf_symfunc_degree(in.get()) + rbf_op_degree_shift(op.get());
  if (rbf_symfunc_degree(in.get()) > rbf_max_degree() || out_degree > rbf_max_degree()) {
    std::cerr << "ribbonfn: degree exceeds RIBBONFN_MAX_DEGREE=" << rbf_max_degree() << "\n";
    return RBF_INVALID_INPUT;
  }
  rbf_symfunc* out_raw = nullptr;
  if (rbf_status s = rbf_op_apply(op.get(), in.get(), &out_raw); s != RBF_OK) return report_error(s, "apply");
  Sym out(out_raw);
  return print_symfunc(out.get(), fmt);
}

int cmd_hl(const std::string& shape, const std::string& via, rbf_format fmt) {
  rbf_symfunc* raw = nullptr;
  if (rbf_status s = rbf_hl_build(shape.c_str(), via == "columns", &raw); s != RBF_OK)
    return report_error(s, "hl");
  Sym f(raw);
  return print_symfunc(f.get(), fmt);
}

int cmd_kostka(const std::string& lambda, const std::string& fmt) {
  char* raw = nullptr;
  if (rbf_status s = rbf_kostka_table(lambda.c_str(), fmt == "json" ? RBF_FORMAT_JSON : RBF_FORMAT_CSV, &raw);
      s != RBF_OK)
    return report_error(s, "kostka");
  String out(raw);
  std::cout << out.get();
  if (fmt == "json") std::cout << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int max_m, int max_k, int max_size, int jobs) {
  char* raw = nullptr;
  const rbf_status s = rbf_verify(suite.c_str(), max_m, max_k, max_size, jobs, &raw);
  if (s != RBF_OK && s != RBF_IDENTITY_FAILURE) return report_error(s, "verify");
  String report(raw);
  std::cout << report.get() << "\n";
  if (s == RBF_IDENTITY_FAILURE) std::cerr << "ribbonfn: " << rbf_last_error() << "\n";
  return static_cast<int>(s);
}

int cmd_suites() {
  char* raw = nullptr;
  if (rbf_status s = rbf_suite_list(&raw); s != RBF_OK) return report_error(s, "suites");
  String out(raw);
  std::cout << out.get();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric-function vertex operators and Hall-Littlewood tables"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rbf_version()));

  std::string op_text, to, shape, via = "rows", lambda, suite;
  std::string sym_format = "text", kostka_format = "csv";
  int max_m = -1, max_k = -1, max_size = -1, jobs = 0;

  auto* apply = app.add_subcommand("apply", "Apply an operator expression to a symmetric function");
  apply->add_option("--op", op_text, "Operator expression, e.g. \"hat(St[1]) . S[2]\"")->required();
  apply->add_option("--to", to, "Symmetric function literal, e.g. \"s[2,1] + q*s[3]\"")->required();
  apply->add_option("--format", sym_format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* hl = app.add_subcommand("hl", "Expand H_lambda[X;q] in the Schur basis");
  hl->add_option("--shape", shape, "Partition, e.g. 2,2,2")->required();
  hl->add_option("--via", via)->check(CLI::IsMember({"rows", "columns"}));
  hl->add_option("--format", sym_format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes table K_{lambda,mu}(q) over all mu");
  kostka->add_option("--lambda", lambda, "Partition, e.g. 3,1")->required();
  kostka->add_option("--format", kostka_format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  verify->add_option("--suite", suite, "Suite name (see `suites`)")->required();
  verify->add_option("--max-m", max_m, "Largest operator index (default: suite default)");
  verify->add_option("--max-k", max_k, "Largest column/ribbon size (default: suite default)");
  verify->add_option("--max-size", max_size, "Largest input degree (default: suite default)");
  verify->add_option("--jobs", jobs, "Worker threads, 0 = available parallelism")->check(CLI::NonNegativeNumber);

  app.add_subcommand("suites", "List verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return RBF_INVALID_INPUT;
  }

  if (*apply) return cmd_apply(op_text, to, kSymFormats.at(sym_format));
  if (*hl) return cmd_hl(shape, via, kSymFormats.at(sym_format));
  if (*kostka) return cmd_kostka(lambda, kostka_format);
  if (*verify) return cmd_verify(suite, max_m, max_k, max_size, jobs);
  return cmd_suites();
}
