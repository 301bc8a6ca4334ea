#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "ellint/errors.hpp"
#include "ellint/reference.hpp"
#include "ellint_tools/audit.hpp"
#include "ellint_tools/io.hpp"
#include "ellint_tools/table.hpp"
#include "json.hpp"

namespace {

using namespace ellint;
using namespace ellint::tools;

enum Exit { ok = 0, usage = 1, region = 2, mismatch = 3 };

Approximation method_or_throw(const std::string& name) {
  const auto m = parse_approximation(name);
  if (!m) throw CLI::ValidationError("--method", "unknown method '" + name + "'");
  return *m;
}

int run_eval(double lambda, double k, const std::string& method, unsigned order,
             const std::string& format, double tol) {
  const EvalPoint p(lambda, k);
  Quality q;
  q.abs_tol = tol;
  q.validate();
  const auto e = evaluate(p, method_or_throw(method), order, q);
  const double f = reference_f(p, q);
  if (format == "json") {
    nlohmann::json out = {{"method", method}, {"order", order},
                          {"lambda", lambda}, {"k", k},
                          {"value", e.value}, {"err_lo", e.err_lo},
                          {"err_hi", e.err_hi}, {"reference", f},
                          {"error", f - e.value}};
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "method,order,lambda,k,value,err_lo,err_hi,reference,error\n"
              << method << ',' << order << ',' << format_number(lambda) << ','
              << format_number(k) << ',' << format_number(e.value) << ','
              << format_number(e.err_lo) << ',' << format_number(e.err_hi)
              << ',' << format_number(f) << ',' << format_number(f - e.value)
              << '\n';
  } else {
    std::cout.precision(16);
    std::cout << "value      " << e.value << '\n'
              << "error in   [" << e.err_lo << ", " << e.err_hi << "]\n"
              << "reference  " << f << '\n'
              << "error      " << f - e.value << '\n';
  }
  return ok;
}

int run_table(int which, const std::string& format, bool check) {
  const auto rows = compute_table(which);
  if (format == "json") {
    write_json(std::cout, rows);
  } else {
    write_csv(std::cout, rows);
  }
  if (!check) return ok;
  const auto bad = check_table(which);
  for (const auto& m : bad) {
    std::cerr << "table " << which << " (" << m.lambda << ", " << m.k << ") "
              << m.column << ": printed " << m.printed << ", computed "
              << format_number(m.computed) << '\n';
  }
  std::cerr << "table " << which << ": "
            << (bad.empty() ? "all cells match" : "mismatch") << '\n';
  return bad.empty() ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incomplete elliptic integral F(lambda, k) with certified enclosures"};
  app.require_subcommand(1);

  std::string format = "text";
  double tol = 1e-14;

  auto* eval = app.add_subcommand("eval", "evaluate one approximation at a point");
  double lambda = 0.0;
  double k = 0.0;
  std::string method = "series_one";
  unsigned order = 1;
  eval->add_option("lambda", lambda, "upper limit of integration")->required();
  eval->add_option("k", k, "modulus")->required();
  eval->add_option("method,--method", method,
                   "series_one, series_two, radon, kelisky, cg1 or cg2");
  eval->add_option("order,--order", order, "truncation order N");
  eval->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  eval->add_option("--tol", tol, "absolute tolerance of the iterative routines");

  auto* table = app.add_subcommand("table", "recompute a reference table");
  int which = 1;
  bool check = false;
  std::string table_format = "csv";
  table->add_option("which", which, "table number")->required()->check(CLI::Range(1, 3));
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--check", check, "compare with the printed values");

  auto* audit = app.add_subcommand("audit", "check enclosure soundness on a grid");
  AuditSpec spec;
  std::vector<std::string> methods{"series_one", "series_two"};
  std::string audit_format = "text";
  audit->add_option("--step", spec.step, "grid step in (0, 0.5]")
      ->check(CLI::Range(1e-4, 0.5));
  audit->add_option("--method", methods, "methods to audit")->delimiter(',');
  audit->add_option("--order", spec.order_max, "audit orders 1..N");
  audit->add_option("--order-min", spec.order_min, "lowest order audited");
  audit->add_option("--format", audit_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  audit->add_option("--tol", spec.tol, "rounding allowance relative to max(1, F)");
  audit->add_option("--threads", spec.threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*eval) return run_eval(lambda, k, method, order, format, tol);
    if (*table) return run_table(which, table_format, check);
    spec.methods.clear();
    for (const auto& m : methods) spec.methods.push_back(method_or_throw(m));
    const auto report = run_audit(spec);
    if (audit_format == "json") {
      write_audit_json(std::cout, report);
    } else if (audit_format == "csv") {
      write_audit_csv(std::cout, report);
    } else {
      write_audit_text(std::cout, report);
    }
    return ok;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return usage;
  } catch (const RegionError& e) {
    std::cerr << "region error: " << e.what() << '\n';
    return region;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return region;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return usage;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return region;
  }
}
