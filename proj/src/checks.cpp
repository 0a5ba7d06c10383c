#include "altmono/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <sstream>

#include "altmono/integral.hpp"

namespace altmono {

namespace {

using Clock = std::chrono::steady_clock;
using CheckBody = std::function<CheckResult()>;

/// Runs every check on its own thread, stamps wall time, and returns the
/// results ordered by name so reports are stable.
std::vector<CheckResult> run_pool(std::vector<std::pair<std::string, CheckBody>> tasks) {
  std::vector<std::future<CheckResult>> futures;
  futures.reserve(tasks.size());
  for (auto& [name, body] : tasks) {
    futures.push_back(std::async(std::launch::async, [name = name, body = std::move(body)] {
      const auto t0 = Clock::now();
      CheckResult r = body();
      r.name = name;
      r.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
      return r;
    }));
  }
  std::vector<CheckResult> out;
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

/// Restricts a suite's compiled-in task registry to the requested names.
/// Unknown names are a config error, raised before anything runs.
void filter_tasks(std::vector<std::pair<std::string, CheckBody>>& tasks,
                  const std::vector<std::string>& wanted) {
  if (wanted.empty()) return;
  for (const std::string& name : wanted) {
    const bool known = std::any_of(tasks.begin(), tasks.end(),
                                   [&](const auto& t) { return t.first == name; });
    if (!known) throw std::invalid_argument("unknown check name: " + name);
  }
  std::erase_if(tasks, [&](const auto& t) {
    return std::find(wanted.begin(), wanted.end(), t.first) == wanted.end();
  });
}

CheckResult exact_check(bool ok, std::string note = {}) {
  CheckResult r;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.exact_zero = ok;
  r.tolerance = 0.0;
  r.note = std::move(note);
  return r;
}

CheckResult numeric_check(double err, double tol, std::string note = {}) {
  CheckResult r;
  r.status = err <= tol ? CheckStatus::pass : CheckStatus::fail;
  r.measured_error = err;
  r.tolerance = tol;
  r.note = std::move(note);
  return r;
}

/// Largest coefficient magnitude, used to quantify a failed symbolic check.
double poly_float_magnitude(const Polynomial& p) {
  double mx = 0.0;
  for (const auto& [expo, coeff] : p.terms) mx = std::max(mx, euclidean_norm(coeff));
  return mx;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

ElementQ random_frame_element(const AlgebraSpec& spec, std::mt19937& gen, bool full_algebra) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  ElementQ x(spec);
  const int limit = full_algebra ? spec.dim_total : spec.dim_hyper;
  for (int i = 0; i < limit; ++i) x.a[i] = Rational(num(gen), den(gen));
  return x;
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "fail";
}

bool VerificationReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

AlgebraSpec algebra_for(const SuiteConfig& config) {
  if (!config.spec_file.empty()) return load_spec_file(config.spec_file);
  return build_algebra(config.kind, config.m);
}

VerificationReport run_check_algebra(const AlgebraSpec& spec, const SuiteConfig& config) {
  std::vector<std::pair<std::string, CheckBody>> tasks;

  auto axioms = [&spec, &config] {
    return check_algebra_axioms(spec, config.sample_count, config.seed);
  };
  tasks.emplace_back("axiom-unity", [axioms] { return exact_check(axioms().unity_ok); });
  tasks.emplace_back("axiom-alternation", [axioms] {
    return exact_check(axioms().alternation_ok, "exhaustive over basis triples");
  });
  tasks.emplace_back("axiom-anti-involution", [axioms] {
    return exact_check(axioms().anti_involution_ok, "exhaustive over basis pairs");
  });
  tasks.emplace_back("axiom-frame", [axioms] { return exact_check(axioms().frame_ok); });
  tasks.emplace_back("axiom-moufang", [axioms, &config] {
    AxiomReport a = axioms();
    std::string note = a.associative
                           ? "implied-by-associativity"
                           : "sampled " + std::to_string(config.sample_count) + " triples";
    return exact_check(a.moufang_ok, std::move(note));
  });
  tasks.emplace_back("cone-membership", [&spec, &config] {
    std::mt19937 gen(config.seed);
    bool ok = cone_membership(scalar_element<Rational>(spec, Rational(5))).in_cone;
    for (int i = 0; i < 100 && ok; ++i) {
      ElementQ x = random_frame_element(spec, gen, false);
      if (x.a[1] == 0) x.a[1] = 1;  // keep the sample off the real axis
      ok = cone_membership(x).in_cone;
    }
    std::string note = "100 seeded frame points";
    if (spec.name == "dual_quaternion") {
      ConeReport eps = cone_membership(basis<Rational>(spec, spec.dim_hyper));
      ok = ok && !eps.in_cone && !eps.trace_real;
      note += "; epsilon direction excluded";
    }
    return exact_check(ok, std::move(note));
  });
  tasks.emplace_back("submultiplicativity", [axioms] {
    AxiomReport a = axioms();
    return numeric_check(a.submultiplicativity, 8.0,
                         "max |xy| / (|x| |y|) over the seeded sample");
  });

  filter_tasks(tasks, config.checks);
  VerificationReport report{"check-algebra", spec.name, spec.m(), config,
                            run_pool(std::move(tasks))};
  return report;
}

VerificationReport run_verify_monogenic(const AlgebraSpec& spec, const SuiteConfig& config) {
  if (config.degree_cap < 1 || config.degree_cap > 6)
    throw std::invalid_argument(
        "degree cap must be in 1..6; higher caps blow up the expansion size");
  const int m = spec.m();
  const std::vector<std::vector<int>> indices = multi_indices_up_to(m, config.degree_cap);

  std::vector<std::pair<std::string, CheckBody>> tasks;
  for (PolyOperator op : {PolyOperator::dbar_left, PolyOperator::dbar_right}) {
    const char* name = op == PolyOperator::dbar_left ? "fueter-dbar-left" : "fueter-dbar-right";
    tasks.emplace_back(name, [&spec, &indices, op] {
      double worst = 0.0;
      int failures = 0;
      for (const auto& k : indices) {
        Polynomial r = apply_operator(op, fueter_polynomial(spec, k));
        if (!r.is_zero()) {
          ++failures;
          worst = std::max(worst, poly_float_magnitude(r));
        }
      }
      CheckResult c = exact_check(failures == 0,
                                  std::to_string(indices.size()) + " multi-indices");
      if (failures > 0) {
        c.measured_error = worst;
        c.note = std::to_string(failures) + " nonzero results";
      }
      return c;
    });
  }
  tasks.emplace_back("fueter-order-independence", [&spec, &indices] {
    bool ok = true;
    for (const auto& k : indices)
      ok = ok && fueter_polynomial(spec, k, Assoc::left_to_right) ==
                     fueter_polynomial(spec, k, Assoc::right_to_left);
    return exact_check(ok, "nesting order of the symmetrized products");
  });
  tasks.emplace_back("ck-extension-factorial", [&spec, &indices, m] {
    bool ok = true;
    for (const auto& k : indices) {
      std::vector<int> expo(m + 1, 0);
      for (int s = 0; s < m; ++s) expo[s + 1] = k[s];
      Polynomial f0(spec, m + 1);
      f0.add_term(expo, scalar_element<Rational>(spec, Rational(1)));
      ok = ok && ck_extension(spec, f0) ==
                     Rational(multi_factorial(k)) * fueter_polynomial(spec, k);
    }
    return exact_check(ok, "extension of x^k against k! P_k");
  });
  tasks.emplace_back("right-multiple-stability", [&spec, &config, m] {
    std::mt19937 gen(config.seed);
    bool ok = true;
    for (const auto& k : multi_indices_up_to(m, std::min(config.degree_cap, 3))) {
      Polynomial p = fueter_polynomial(spec, k);
      for (int trial = 0; trial < 3; ++trial) {
        ElementQ a = random_frame_element(spec, gen, true);
        ok = ok && apply_operator(PolyOperator::dbar_left, right_multiply(p, a)).is_zero();
      }
    }
    return exact_check(ok, "P_k times random constants stays monogenic");
  });

  filter_tasks(tasks, config.checks);
  VerificationReport report{"verify-monogenic", spec.name, m, config, run_pool(std::move(tasks))};
  return report;
}

VerificationReport run_reconstruct(const AlgebraSpec& spec, const SuiteConfig& config) {
  const int m = spec.m();
  if (m < 1 || m > 3)
    throw std::invalid_argument(
        "reconstruct needs a tensor-product quadrature frame, so m must be 1..3");
  const int res = config.resolution;
  const std::vector<double> origin(m + 1, 0.0);
  const QuadratureRule bd =
      build_quadrature(RuleKind::sphere_surface, origin, 1.0, m, res, config.seed);
  const QuadratureRule vol =
      build_quadrature(RuleKind::ball_volume, origin, 1.0, m, res, config.seed);

  std::vector<int> poly_index(m, 0);
  if (m >= 2) {
    poly_index[0] = 1;
    poly_index[1] = 1;
  } else {
    poly_index[0] = 2;
  }
  const Polynomial poly = fueter_polynomial(spec, poly_index);

  std::vector<double> probe(m + 1, 0.0);
  probe[1] = 0.3;
  if (m >= 2) probe[2] = 0.1;
  std::vector<double> scalar_probe(m + 1, 0.0);
  scalar_probe[0] = 0.2;

  std::vector<std::pair<std::string, CheckBody>> tasks;
  tasks.emplace_back("cauchy-constant", [&spec, &bd, &scalar_probe] {
    const ElementD one = scalar_element<double>(spec, 1.0);
    EvalResult r = cauchy_integral(bd, [&](const double*) { return one; }, scalar_probe);
    CheckResult c = numeric_check(euclidean_norm(r.value - one), 1e-8);
    c.guard_distance = 0.8;
    c.error_estimate = r.error_estimate;
    return c;
  });
  tasks.emplace_back("cauchy-polynomial", [&bd, &poly, &probe] {
    EvalResult r = cauchy_integral(bd, sampled(poly), probe);
    CheckResult c = numeric_check(euclidean_norm(r.value - evaluate(poly, probe)), 1e-6);
    double norm2 = 0.0;
    for (double v : probe) norm2 += v * v;
    c.guard_distance = 1.0 - std::sqrt(norm2);
    c.error_estimate = r.error_estimate;
    return c;
  });
  tasks.emplace_back("cauchy-exterior", [&bd, &poly, m] {
    std::vector<double> outside(m + 1, 0.0);
    outside[0] = 2.0;
    EvalResult r = cauchy_integral(bd, sampled(poly), outside);
    return numeric_check(euclidean_norm(r.value), 1e-6, "absolute error outside the shell");
  });
  tasks.emplace_back("pompeiu-reconstruction", [&spec, &bd, &vol, &config, m] {
    SampledFunction f = [&spec](const double* y) {
      return scalar_element<double>(spec, y[0]);
    };
    SampledFunction dbf = [&spec](const double*) { return scalar_element<double>(spec, 1.0); };
    // off the polar axis of the volume grid, where the excluded ring resolves best
    std::vector<double> pv_probe(m + 1, 0.0);
    pv_probe[0] = -0.1;
    pv_probe[m] = -0.2;
    EvalResult r = cauchy_pompeiu(bd, vol, f, dbf, pv_probe, config.epsilon);
    CheckResult c = numeric_check(
        euclidean_norm(r.value - scalar_element<double>(spec, pv_probe[0])), 1e-3,
        "f = y_0 with unit volume density, epsilon " + format_sci(config.epsilon));
    double norm2 = 0.0;
    for (double v : pv_probe) norm2 += v * v;
    c.guard_distance = 1.0 - std::sqrt(norm2);
    c.error_estimate = r.error_estimate;
    return c;
  });
  tasks.emplace_back("teodorescu-inverse", [&spec, &vol, &config, m] {
    SampledFunction one = [&spec](const double*) { return scalar_element<double>(spec, 1.0); };
    auto field = [&](const std::vector<double>& z) {
      return teodorescu(vol, one, z, config.epsilon).value;
    };
    std::vector<double> x(m + 1, 0.0);
    x[1] = 0.2;
    ElementD db = fd_dbar_left(field, spec, x, 1e-4);
    CheckResult c = numeric_check(euclidean_norm(db - scalar_element<double>(spec, 1.0)), 5e-3,
                                  "finite-difference dbar of T[1]");
    c.guard_distance = 0.8;
    return c;
  });
  tasks.emplace_back("mean-value", [&spec, &config, m] {
    Polynomial x1sq(spec, m + 1);
    std::vector<int> expo(m + 1, 0);
    expo[1] = 2;
    x1sq.add_term(expo, scalar_element<Rational>(spec, Rational(1)));
    Polynomial ck = ck_extension(spec, x1sq);
    std::vector<double> center(m + 1, 0.0);
    center[0] = 0.1;
    ElementD avg = mean_value(center, 0.2, sampled(ck), config.resolution);
    return numeric_check(euclidean_norm(avg - evaluate(ck, center)), 1e-7,
                         "monogenic extension of x_1^2 on a small sphere");
  });
  tasks.emplace_back("gauss-identity", [&spec, &bd, &vol] {
    FramedField phi = framed_field(fueter_variable(spec, 1));
    FramedField f = framed_field(constant_polynomial(
        scalar_element<Rational>(spec, Rational(1)) + Rational(2) * basis<Rational>(spec, 1)));
    return numeric_check(gauss_residual(bd, vol, phi, f), 1e-6,
                         "surface integral against the volume side, associator kept");
  });
  tasks.emplace_back("convergence-table", [&bd, &poly, &probe, &spec, m, res, &config] {
    const int half_res = std::max(4, res / 2);
    const std::vector<double> origin(m + 1, 0.0);
    QuadratureRule half =
        build_quadrature(RuleKind::sphere_surface, origin, 1.0, m, half_res, config.seed);
    ElementD want = evaluate(poly, probe);
    double err_full = euclidean_norm(cauchy_integral(bd, sampled(poly), probe).value - want);
    double err_half = euclidean_norm(cauchy_integral(half, sampled(poly), probe).value - want);
    std::ostringstream note;
    note << "res " << half_res << ": " << format_sci(err_half) << "; res " << res << ": "
         << format_sci(err_full);
    double ratio = err_half > 0 ? err_full / err_half : 0.0;
    CheckResult c = numeric_check(ratio, 1.1, note.str());
    if (err_full < 1e-12) c.status = CheckStatus::pass;  // both sit on the noise floor
    return c;
  });

  filter_tasks(tasks, config.checks);
  VerificationReport report{"reconstruct", spec.name, m, config, run_pool(std::move(tasks))};
  return report;
}

VerificationReport run_taylor_demo(const AlgebraSpec& spec, const SuiteConfig& config) {
  if (config.degree_cap < 2 || config.degree_cap > 6)
    throw std::invalid_argument("taylor demo needs a degree cap in 2..6");
  const int m = spec.m();
  const int cap = config.degree_cap;

  std::vector<std::pair<std::string, CheckBody>> tasks;
  tasks.emplace_back("taylor-exact-polynomial", [&spec, m] {
    std::vector<int> idx(m, 0);
    if (m >= 2) {
      idx[0] = 1;
      idx[1] = 1;
    } else {
      idx[0] = 2;
    }
    Polynomial f = right_multiply(fueter_polynomial(spec, idx),
                                  scalar_element<Rational>(spec, Rational(1)) +
                                      Rational(2) * basis<Rational>(spec, 1)) +
                   fueter_variable(spec, 1);
    std::map<std::vector<int>, ElementD, GrlexLess> derivs;
    std::vector<Rational> origin(m + 1, Rational(0));
    for (int total = 0; total <= 2; ++total) {
      for (const auto& k : multi_indices_of_degree(m, total)) {
        std::vector<int> full(m + 1, 0);
        for (int s = 0; s < m; ++s) full[s + 1] = k[s];
        derivs[k] = to_double(evaluate(partial_derivative(f, full), origin));
      }
    }
    std::vector<double> x(m + 1, 0.0);
    x[0] = 0.3;
    x[1] = -0.4;
    double err = euclidean_norm(taylor_evaluate(spec, derivs, x, 2) - evaluate(f, x));
    return numeric_check(err, 1e-12, "degree-2 sections reproduce a degree-2 polynomial");
  });
  tasks.emplace_back("taylor-remainder-decay", [&spec, m, cap] {
    auto table = kernel_table(spec, cap);
    std::vector<double> y(m + 1, 0.0);
    y[1] = 3.0;
    std::map<std::vector<int>, ElementD, GrlexLess> derivs;
    for (const auto& [k, q] : table)  // table keys carry the (always zero) x_0 slot
      derivs[std::vector<int>(k.begin() + 1, k.end())] = -1.0 * evaluate_radial(q, y);

    RadialRationalFunction e = cauchy_kernel(spec);
    std::vector<double> x(m + 1, 0.0);
    x[m] = 0.5;
    std::vector<double> shifted(m + 1);
    for (int s = 0; s <= m; ++s) shifted[s] = x[s] - y[s];
    ElementD ref = evaluate_radial(e, shifted);

    std::vector<double> errs;
    for (int n = 0; n <= cap; ++n)
      errs.push_back(euclidean_norm(taylor_evaluate(spec, derivs, x, n) - ref));
    double worst = 0.0;
    std::ostringstream note;
    note << "per-order error ratios vs 1/6:";
    for (int n = 2; n <= cap; ++n) {
      double ratio = errs[n] / errs[n - 1];
      worst = std::max(worst, std::fabs(std::log2(6.0 * ratio)));
      note << ' ' << format_sci(ratio);
    }
    return numeric_check(worst, 1.0, note.str());
  });

  filter_tasks(tasks, config.checks);
  VerificationReport report{"taylor-demo", spec.name, m, config, run_pool(std::move(tasks))};
  return report;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["schema"] = 1;
  j["suite"] = report.suite;
  j["all_pass"] = report.all_pass();
  Json cfg;
  cfg["spec_name"] = report.spec_name;
  cfg["m"] = report.m;
  cfg["resolution"] = report.config.resolution;
  cfg["epsilon"] = report.config.epsilon;
  cfg["seed"] = report.config.seed;
  cfg["degree_cap"] = report.config.degree_cap;
  cfg["sample_count"] = report.config.sample_count;
  cfg["format"] = report.config.format;
  if (!report.config.spec_file.empty()) cfg["spec_file"] = report.config.spec_file;
  if (!report.config.checks.empty()) cfg["checks"] = report.config.checks;
  j["config"] = std::move(cfg);

  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    if (c.exact_zero)
      e["measured_error"] = "exact-zero";
    else
      e["measured_error"] = c.measured_error;
    e["tolerance"] = c.tolerance;
    e["runtime_ms"] = c.runtime_ms;
    if (!c.note.empty()) e["note"] = c.note;
    if (c.guard_distance >= 0) e["guard_distance"] = c.guard_distance;
    if (c.error_estimate >= 0) e["error_estimate"] = c.error_estimate;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "name,status,measured_error,tolerance,runtime_ms\n";
  for (const CheckResult& c : report.checks) {
    out << c.name << ',' << status_name(c.status) << ',';
    if (c.exact_zero)
      out << "exact-zero";
    else
      out << format_sci(c.measured_error);
    out << ',' << format_sci(c.tolerance) << ',' << c.runtime_ms << '\n';
  }
  return out.str();
}

}  // namespace altmono
