#pragma once

#include <string>
#include <vector>

#include "altmono/serialize.hpp"

namespace altmono {

/// Everything a verification suite needs to be reproducible. `m` of -1 means
/// the kind's default frame; `spec_file` (when set) overrides `kind` entirely.
struct SuiteConfig {
  AlgebraKind kind = AlgebraKind::octonion;
  int m = -1;
  std::string spec_file;
  std::vector<std::string> checks;  ///< empty means the full registry of the suite
  int resolution = 32;
  double epsilon = 0.05;
  unsigned seed = 42;
  int degree_cap = 4;
  int sample_count = 64;  ///< triples drawn for the sampled axiom checks
  std::string format = "json";
  std::string output_path;
};

enum class CheckStatus { pass, fail, skip };
std::string status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  bool exact_zero = false;      ///< symbolic check that came out identically zero
  double measured_error = 0.0;  ///< ignored when exact_zero; serialized as "exact-zero"
  double tolerance = 0.0;
  long long runtime_ms = 0;
  std::string note;
  double guard_distance = -1.0;  ///< distance to the nearest singular set, when tracked
  double error_estimate = -1.0;  ///< resolution-halving estimate, when tracked
};

struct VerificationReport {
  std::string suite;
  std::string spec_name;
  int m = 0;
  SuiteConfig config;
  std::vector<CheckResult> checks;  ///< sorted by name

  bool all_pass() const;
};

AlgebraSpec algebra_for(const SuiteConfig& config);

/// Axiom battery plus quadratic-cone sampling. Failures are check entries.
VerificationReport run_check_algebra(const AlgebraSpec& spec, const SuiteConfig& config);

/// Exact symbolic suite over all multi-indices |k| <= degree_cap. Throws
/// std::invalid_argument when the cap exceeds 6.
VerificationReport run_verify_monogenic(const AlgebraSpec& spec, const SuiteConfig& config);

/// Numeric reconstruction suite on the unit ball. Needs a tensor-product
/// quadrature frame, so it throws std::invalid_argument unless m is 1..3.
VerificationReport run_reconstruct(const AlgebraSpec& spec, const SuiteConfig& config);

/// Finite Taylor sections of a shifted kernel: exactness on polynomials and
/// the geometric remainder decay at |x|/|y| = 1/6.
VerificationReport run_taylor_demo(const AlgebraSpec& spec, const SuiteConfig& config);

/// Schema-versioned report. Identical configs give byte-identical output
/// except for the runtime_ms fields.
Json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

}  // namespace altmono
