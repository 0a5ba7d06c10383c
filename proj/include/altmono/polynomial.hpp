#pragma once

#include <map>
#include <vector>

#include "altmono/algebra.hpp"

namespace altmono {

/// Graded lexicographic order on exponent vectors: total degree first, then
/// lexicographic with the first variable most significant.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da < db;
    return a < b;
  }
};

/// Multivariate polynomial in the frame coordinates x_0..x_m with algebra
/// coefficients. Monomials are real scalars, so coefficient placement is
/// immaterial; they are stored canonically on the right.
struct Polynomial {
  const AlgebraSpec* spec = nullptr;
  int nvars = 0;  ///< always m+1 for the owning spec
  std::map<std::vector<int>, ElementQ, GrlexLess> terms;

  Polynomial() = default;
  Polynomial(const AlgebraSpec& sp, int nv) : spec(&sp), nvars(nv) {}

  bool is_zero() const { return terms.empty(); }
  int degree() const;  ///< -1 for the zero polynomial
  bool depends_on(int var) const;

  void add_term(const std::vector<int>& expo, const ElementQ& coeff);
};

Polynomial zero_polynomial(const AlgebraSpec& spec);
Polynomial constant_polynomial(const ElementQ& c);
/// The coordinate function x_var as a polynomial.
Polynomial coordinate(const AlgebraSpec& spec, int var);

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& k, const Polynomial& p);
bool operator==(const Polynomial& p, const Polynomial& q);

/// Multiply every coefficient by a on the left / right.
Polynomial left_multiply(const ElementQ& a, const Polynomial& p);
Polynomial right_multiply(const Polynomial& p, const ElementQ& a);

/// d/dx_var, exact.
Polynomial partial(const Polynomial& p, int var);
/// Iterated partials; k has m+1 slots (k_0, ..., k_m).
Polynomial partial_derivative(const Polynomial& p, const std::vector<int>& k);

ElementQ evaluate(const Polynomial& p, const std::vector<Rational>& x);
ElementD evaluate(const Polynomial& p, const std::vector<double>& x);

/// Flat double-precision copy for quadrature inner loops.
struct CompiledPolynomial {
  int nvars = 0;
  int dim_total = 0;
  std::vector<std::vector<int>> exponents;
  std::vector<std::vector<double>> coeffs;
  const AlgebraSpec* spec = nullptr;

  ElementD eval(const double* x) const;
};

CompiledPolynomial compile(const Polynomial& p);

// ============================================================================
// Fueter calculus
// ============================================================================

/// z_l = x_l - x_0 v_l for 1 <= l <= m.
Polynomial fueter_variable(const AlgebraSpec& spec, int l);

enum class Assoc { right_to_left, left_to_right };

/// Symmetrized Fueter polynomial P_k for a multi-index k over m slots:
/// (1/|k|!) * sum over the |k|!/k! distinct permutation words of the nested
/// product of Fueter variables. P_0 = 1. Nested products use the requested
/// association; the expanded result is association-independent.
Polynomial fueter_polynomial(const AlgebraSpec& spec, const std::vector<int>& k,
                             Assoc assoc = Assoc::right_to_left);

enum class Side { left, right };

/// Monogenic extension of a polynomial in x_1..x_m off the hyperplane x_0 = 0:
/// sum_j ((-x_0)^j / j!) D^j f0 where D stacks v_s against d/dx_s on the
/// requested side. Throws if f0 depends on x_0.
Polynomial ck_extension(const AlgebraSpec& spec, const Polynomial& f0, Side side = Side::left);

enum class PolyOperator { dbar_left, dbar_right, dconj_left, dconj_right, laplacian };

/// Cauchy-Riemann-type operators over the frame: dbar_left p = sum_s v_s (d_s p),
/// dbar_right p = sum_s (d_s p) v_s, dconj variants flip the sign of the
/// imaginary part, laplacian p = sum_s d_s^2 p.
Polynomial apply_operator(PolyOperator op, const Polynomial& p);

/// All multi-indices over `slots` variables with |k| == total, in grlex order.
std::vector<std::vector<int>> multi_indices_of_degree(int slots, int total);
/// All multi-indices with |k| <= cap, in grlex order.
std::vector<std::vector<int>> multi_indices_up_to(int slots, int cap);

BigInt multi_factorial(const std::vector<int>& k);

}  // namespace altmono
