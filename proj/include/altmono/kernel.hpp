#pragma once

#include "altmono/polynomial.hpp"

namespace altmono {

/// Surface area of the unit sphere bounding the unit ball of an
/// (m+1)-dimensional space, as an exact rational multiple of a power of pi.
struct SurfaceConstant {
  int m = 0;
  Rational coef{0};
  int pi_power = 0;
  double value = 0.0;

  PiScaled symbolic() const { return {coef, pi_power}; }
};

SurfaceConstant surface_area_sigma(int m);

/// Finite sum  prefactor * sum_j p_j(x) |x|^{-(m+1+2j)}  with polynomial
/// numerators over x_0..x_m. Closed under partial differentiation; the
/// canonical form reduces every numerator modulo |x|^2 so that equality and
/// zero-testing are decidable.
struct RadialRationalFunction {
  const AlgebraSpec* spec = nullptr;
  int m = 0;
  PiScaled prefactor{Rational(1), 0};
  std::map<int, Polynomial> numerators;  ///< level j -> p_j

  bool structurally_zero() const { return numerators.empty(); }
};

/// E(x) = (1/sigma_m) x^c / |x|^{m+1} restricted to the frame subspace.
RadialRationalFunction cauchy_kernel(const AlgebraSpec& spec);

/// Reduce numerators modulo |x|^2, merge levels, drop zero terms. Canonical:
/// the zero function has an empty representation afterwards.
RadialRationalFunction canonicalize(const RadialRationalFunction& f);

bool is_zero(const RadialRationalFunction& f);
bool equal(const RadialRationalFunction& f, const RadialRationalFunction& g);

RadialRationalFunction operator+(const RadialRationalFunction& f, const RadialRationalFunction& g);
RadialRationalFunction operator-(const RadialRationalFunction& f, const RadialRationalFunction& g);
RadialRationalFunction operator-(const RadialRationalFunction& f);

/// d/dx_s, canonicalized.
RadialRationalFunction radial_partial(const RadialRationalFunction& f, int s);

/// Signed higher kernel derivative: (-1)^{|k|} d_k applied to the input,
/// so feeding E and k yields Q_k. k has m+1 slots.
RadialRationalFunction differentiate_kernel(const RadialRationalFunction& f,
                                            const std::vector<int>& k);

/// sum_s v_s d_s f and sum_s (d_s f) v_s over s = 0..m.
RadialRationalFunction dbar_left(const RadialRationalFunction& f);
RadialRationalFunction dbar_right(const RadialRationalFunction& f);
RadialRationalFunction laplacian(const RadialRationalFunction& f);

RadialRationalFunction right_multiply(const RadialRationalFunction& f, const ElementQ& a);
RadialRationalFunction left_multiply(const ElementQ& a, const RadialRationalFunction& f);

/// Scalar component s of f as a radial-rational function (coefficients
/// become real multiples of the unity).
RadialRationalFunction component(const RadialRationalFunction& f, int s);

/// Exact evaluation data at a rational point x != 0:
///   f(x) = prefactor * |x|^{-(m+1+2*level)} * profile
/// where `profile` is an exact algebra element. Useful because the common
/// scalar factor is positive, so identities can be checked on `profile`.
struct ExactRadialValue {
  ElementQ profile;
  int level = 0;        ///< the J in |x|^{-(m+1+2J)}
  PiScaled prefactor;   ///< copied from the function
  Rational radius_sq;   ///< |x|^2
};

ExactRadialValue exact_value(const RadialRationalFunction& f, const std::vector<Rational>& x);

/// Float evaluation; throws std::domain_error at x = 0.
ElementD evaluate_radial(const RadialRationalFunction& f, const std::vector<double>& x);

/// Double-precision closure for quadrature inner loops.
struct CompiledRadial {
  const AlgebraSpec* spec = nullptr;
  int m = 0;
  double prefactor = 0.0;
  std::vector<std::pair<int, CompiledPolynomial>> levels;

  ElementD eval(const double* x) const;
};

CompiledRadial compile_radial(const RadialRationalFunction& f);

/// Cached table of Q_k for all |k| <= cap, k over m+1 slots with k_0 = 0
/// unless `include_x0` is set.
std::map<std::vector<int>, RadialRationalFunction, GrlexLess> kernel_table(const AlgebraSpec& spec,
                                                                           int cap,
                                                                           bool include_x0 = false);

}  // namespace altmono
