#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "altmono/checks.hpp"

using namespace altmono;

namespace {

/// Writes the report where the config says (explicit path, then the
/// ALTMONO_OUT_DIR default directory, then stdout) and maps pass/fail to the
/// process exit code.
int emit_report(const VerificationReport& report) {
  std::string text = report.config.format == "csv"
                         ? report_to_csv(report)
                         : report_to_json(report).dump(2) + "\n";
  std::string path = report.config.output_path;
  if (path.empty()) {
    const char* dir = std::getenv("ALTMONO_OUT_DIR");
    if (dir != nullptr && *dir != '\0')
      path = std::string(dir) + "/" + report.suite + "." + report.config.format;
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write report to " << path << "\n";
      return 2;
    }
    out << text;
  }

  int failed = 0;
  for (const CheckResult& c : report.checks)
    if (c.status == CheckStatus::fail) ++failed;
  std::cerr << report.suite << " [" << report.spec_name << ", m=" << report.m << "]: "
            << report.checks.size() << " checks, "
            << (failed == 0 ? "all pass" : std::to_string(failed) + " failed") << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification suites for monogenic function calculus over real alternative *-algebras"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string kind_name = "octonion";

  auto add_common = [&](CLI::App* sub, bool numeric) {
    sub->add_option("--kind", kind_name, "shipped algebra family")
        ->check(CLI::IsMember({"complex", "quaternion", "octonion", "clifford",
                               "dual_quaternion"}));
    sub->add_option("--m", cfg.m, "hypercomplex frame size (clifford: generator count)");
    sub->add_option("--spec-file", cfg.spec_file,
                    "load the algebra from a JSON spec instead of --kind");
    sub->add_option("--checks", cfg.checks, "run only these named checks")->delimiter(',');
    sub->add_option("--seed", cfg.seed, "seed for all sampled checks (default 42)");
    sub->add_option("--degree-cap", cfg.degree_cap,
                    "largest multi-index total degree (default 4, max 6)");
    sub->add_option("--format", cfg.format, "report format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.output_path, "report file path (default: stdout)");
    if (numeric) {
      sub->add_option("--resolution", cfg.resolution,
                      "quadrature resolution per angle (default 32)");
      sub->add_option("--epsilon", cfg.epsilon,
                      "principal-value exclusion radius (default 0.05)");
    }
    return sub;
  };

  CLI::App* sc_algebra = add_common(
      app.add_subcommand("check-algebra",
                         "algebra axioms, Moufang sampling, and quadratic-cone membership"),
      false);
  sc_algebra->add_option("--sample-count", cfg.sample_count,
                         "triples drawn for the Moufang sample (default 64)");
  CLI::App* sc_monogenic = add_common(
      app.add_subcommand("verify-monogenic",
                         "exact symbolic checks: Fueter polynomials, CK extension, stability"),
      false);
  CLI::App* sc_reconstruct = add_common(
      app.add_subcommand("reconstruct",
                         "numeric reconstruction formulas on the unit ball (m in 1..3)"),
      true);
  CLI::App* sc_taylor = add_common(
      app.add_subcommand("taylor-demo",
                         "finite Taylor sections of a shifted kernel and their decay"),
      false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.spec_file.empty()) {
      auto kind = parse_algebra_kind(kind_name);
      cfg.kind = *kind;  // membership already validated by CLI11
    }
    // the numeric and Taylor suites default to a small frame; the axiom and
    // symbolic suites use the kind's full default frame
    if (cfg.m < 0 && (sc_reconstruct->parsed() || sc_taylor->parsed())) cfg.m = 2;

    AlgebraSpec spec = algebra_for(cfg);
    VerificationReport report;
    if (sc_algebra->parsed())
      report = run_check_algebra(spec, cfg);
    else if (sc_monogenic->parsed())
      report = run_verify_monogenic(spec, cfg);
    else if (sc_reconstruct->parsed())
      report = run_reconstruct(spec, cfg);
    else
      report = run_taylor_demo(spec, cfg);
    return emit_report(report);
  } catch (const Json::exception& e) {
    std::cerr << "spec parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
