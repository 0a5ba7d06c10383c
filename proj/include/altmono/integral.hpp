#pragma once

#include <map>

#include "altmono/kernel.hpp"
#include "altmono/polynomial.hpp"
#include "altmono/quadrature.hpp"

namespace altmono {

/// Numeric integral value plus bookkeeping: `reliable` reports the accuracy
/// guard dist(x, shell) >= 0.1 * radius, `error_estimate` the difference
/// against a half-resolution rerun (0 when the rule is too coarse to halve).
struct EvalResult {
  ElementD value;
  bool reliable = true;
  double error_estimate = 0.0;
};

/// Wrap an exact polynomial as a double-precision evaluator.
SampledFunction sampled(const Polynomial& p);

/// C^1 field with exact partial-derivative callbacks, one per frame
/// coordinate x_0..x_m.
struct FramedField {
  SampledFunction value;
  std::vector<SampledFunction> partials;
};

FramedField framed_field(const Polynomial& p);

/// Central finite differences with one Richardson step, h defaulting to
/// 1e-4 times the relevant radius at call sites. fd_dbar_left applies
/// sum_s v_s d_s, fd_d_left the conjugated operator d_0 - sum_{s>=1} v_s d_s.
ElementD fd_dbar_left(const std::function<ElementD(const std::vector<double>&)>& field,
                      const AlgebraSpec& spec, const std::vector<double>& x, double h);
ElementD fd_d_left(const std::function<ElementD(const std::vector<double>&)>& field,
                   const AlgebraSpec& spec, const std::vector<double>& x, double h);

/// Boundary reproduction of a left-monogenic f: quadrature of
/// E(y - x) (n(y) f(y)) over the sphere, kernel applied to the already
/// formed product. For x outside the closed ball the result is near zero.
EvalResult cauchy_integral(const QuadratureRule& boundary, const SampledFunction& f,
                           const std::vector<double>& x);

/// Same integrand without any monogenicity reading: left-monogenic in x off
/// the boundary shell, decays like |x|^{-m} far away.
EvalResult cauchy_transform(const QuadratureRule& boundary, const SampledFunction& f,
                            const std::vector<double>& x);

/// Boundary term minus volume term against dbar_f; volume nodes inside
/// B(x, epsilon) are excluded (principal value). Throws when x is not
/// interior or epsilon >= dist(x, shell)/2.
EvalResult cauchy_pompeiu(const QuadratureRule& boundary, const QuadratureRule& volume,
                          const SampledFunction& f, const SampledFunction& dbar_f,
                          const std::vector<double>& x, double epsilon);

/// Teodorescu transform -int E(y - x) f(y) dV realized with the singular
/// ball integrated in closed form: the quadrature handles
/// E(y - x)(f(y) - f(x)) with the epsilon exclusion, and the known ball
/// moment of E contributes ((x - c)^c / (m+1)) f(x) exactly.
EvalResult teodorescu(const QuadratureRule& volume, const SampledFunction& f,
                      const std::vector<double>& x, double epsilon);

/// d_k f(0) for left-monogenic f via the signed kernel derivative:
/// quadrature of Q_k(y) (n(y) f(y)). The ball must contain 0.
EvalResult derivative_formula(const QuadratureRule& boundary, const SampledFunction& f,
                              const std::vector<int>& k);

/// Surface average over the sphere around `center`, normalized by the exact
/// sigma_m radius^m.
ElementD mean_value(const std::vector<double>& center, double radius, const SampledFunction& f,
                    int resolution = 32);

/// | boundary - volume | for the divergence identity
///   int_shell phi (n f) dS = int_ball [(phi dbar) f + phi (dbar f)
///                                      - sum_s [v_s, dbar phi_s, f]] dV
/// with (phi dbar) = sum_s (d_s phi) v_s formed first. phi must be M-valued.
/// Dropping the associator sum (include_associator = false) measures the
/// ablated identity.
double gauss_residual(const QuadratureRule& boundary, const QuadratureRule& volume,
                      const FramedField& phi, const FramedField& f,
                      bool include_associator = true);

/// Partial Taylor sum sum_{|k| <= N} P_k(x) * deriv[k] with k over the m
/// frame slots; each product is one algebra multiplication. Throws when a
/// required derivative entry is missing.
ElementD taylor_evaluate(const AlgebraSpec& spec,
                         const std::map<std::vector<int>, ElementD, GrlexLess>& derivs_at_0,
                         const std::vector<double>& x, int degree_cap);

}  // namespace altmono
