#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "altmono/rational.hpp"

namespace altmono {

// ============================================================================
// Structure-constant description of a finite-dimensional real alternative
// *-algebra with a distinguished hypercomplex frame (1, v_1, ..., v_m).
// ============================================================================

struct TensorEntry {
  int s, t, u;
  Rational c;
  double cd;
};

struct AlgebraSpec {
  std::string name;
  int dim_total = 0;  ///< d+1, size of the fitted basis
  int dim_hyper = 0;  ///< m+1, size of the hypercomplex frame
  std::vector<Rational> structure;   ///< dense rank-3 tensor, row-major [s][t][u]
  std::vector<int> involution_sign;  ///< +1 or -1 per basis element

  std::vector<TensorEntry> nonzero;  ///< sparse view of `structure`, built once

  int m() const { return dim_hyper - 1; }

  const Rational& c(int s, int t, int u) const {
    return structure[(static_cast<size_t>(s) * dim_total + t) * dim_total + u];
  }
  Rational& c_mut(int s, int t, int u) {
    return structure[(static_cast<size_t>(s) * dim_total + t) * dim_total + u];
  }

  /// Rebuild the sparse entry list after editing `structure`.
  void index_nonzero();

  /// Empty when the spec satisfies unity, involution shape, anti-involution,
  /// associator alternation on basis triples, and hypercomplex frame validity.
  std::vector<std::string> validate() const;
};

enum class AlgebraKind { complex_field, quaternion, octonion, clifford, dual_quaternion };

/// Builds one of the shipped algebras. `m_param` means: number of Clifford
/// generators for `clifford`; otherwise an optional hypercomplex-frame size
/// override (defaults: complex 1, quaternion 3, octonion 7, dual_quaternion 3).
AlgebraSpec build_algebra(AlgebraKind kind, int m_param = -1);

std::optional<AlgebraKind> parse_algebra_kind(std::string_view name);
std::string algebra_kind_name(AlgebraKind kind);

// ============================================================================
// Elements
// ============================================================================

template <class S>
struct Element {
  const AlgebraSpec* spec = nullptr;
  std::vector<S> a;

  Element() = default;
  explicit Element(const AlgebraSpec& sp) : spec(&sp), a(sp.dim_total, S(0)) {}
  Element(const AlgebraSpec& sp, std::vector<S> coeffs) : spec(&sp), a(std::move(coeffs)) {}

  bool is_zero() const {
    for (const S& x : a)
      if (!(x == S(0))) return false;
    return true;
  }
  bool operator==(const Element& o) const { return spec == o.spec && a == o.a; }
};

using ElementQ = Element<Rational>;
using ElementD = Element<double>;

namespace detail {
inline void require_same_spec(const AlgebraSpec* x, const AlgebraSpec* y) {
  if (x == nullptr || y == nullptr || x != y)
    throw std::invalid_argument("operands belong to different algebra specs");
}
template <class S>
const S& tensor_coeff(const TensorEntry& e);
template <>
inline const Rational& tensor_coeff<Rational>(const TensorEntry& e) { return e.c; }
template <>
inline const double& tensor_coeff<double>(const TensorEntry& e) { return e.cd; }
}  // namespace detail

template <class S>
Element<S> zero(const AlgebraSpec& spec) { return Element<S>(spec); }

template <class S>
Element<S> basis(const AlgebraSpec& spec, int i) {
  Element<S> e(spec);
  e.a.at(i) = S(1);
  return e;
}

template <class S>
Element<S> scalar_element(const AlgebraSpec& spec, const S& v) {
  Element<S> e(spec);
  e.a[0] = v;
  return e;
}

template <class S>
Element<S> operator+(const Element<S>& x, const Element<S>& y) {
  detail::require_same_spec(x.spec, y.spec);
  Element<S> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

template <class S>
Element<S> operator-(const Element<S>& x, const Element<S>& y) {
  detail::require_same_spec(x.spec, y.spec);
  Element<S> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

template <class S>
Element<S> operator-(const Element<S>& x) {
  Element<S> r = x;
  for (auto& v : r.a) v = -v;
  return r;
}

template <class S>
Element<S> operator*(const S& k, const Element<S>& x) {
  Element<S> r = x;
  for (auto& v : r.a) v *= k;
  return r;
}

template <class S>
Element<S> operator*(const Element<S>& x, const S& k) { return k * x; }

/// Bilinear contraction against the structure tensor.
template <class S>
Element<S> mul(const Element<S>& x, const Element<S>& y) {
  detail::require_same_spec(x.spec, y.spec);
  Element<S> r(*x.spec);
  for (const TensorEntry& e : x.spec->nonzero) {
    const S& xs = x.a[e.s];
    if (xs == S(0)) continue;
    const S& yt = y.a[e.t];
    if (yt == S(0)) continue;
    r.a[e.u] += detail::tensor_coeff<S>(e) * xs * yt;
  }
  return r;
}

template <class S>
Element<S> operator*(const Element<S>& x, const Element<S>& y) { return mul(x, y); }

template <class S>
Element<S> conjugate(const Element<S>& x) {
  Element<S> r = x;
  for (int i = 0; i < r.spec->dim_total; ++i)
    if (r.spec->involution_sign[i] < 0) r.a[i] = -r.a[i];
  return r;
}

template <class S>
Element<S> trace(const Element<S>& x) { return x + conjugate(x); }

template <class S>
Element<S> norm_q(const Element<S>& x) { return mul(x, conjugate(x)); }

template <class S>
Element<S> associator(const Element<S>& x, const Element<S>& y, const Element<S>& z) {
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

template <class S>
bool in_hyper_subspace(const Element<S>& x) {
  for (int i = x.spec->dim_hyper; i < x.spec->dim_total; ++i)
    if (!(x.a[i] == S(0))) return false;
  return true;
}

/// Inverse of an invertible element of the hypercomplex subspace M,
/// x^{-1} = x^c / n(x). Throws on zero norm or when x is outside M.
ElementQ inverse_in_M(const ElementQ& x);

double euclidean_norm(const ElementD& x);
double euclidean_norm(const ElementQ& x);

ElementD to_double(const ElementQ& x);

// ============================================================================
// Axiom checking and the quadratic cone
// ============================================================================

struct AxiomReport {
  bool unity_ok = false;
  bool alternation_ok = false;           ///< exhaustive over basis triples
  bool moufang_ok = false;               ///< sampled; all three identities
  bool anti_involution_ok = false;       ///< exhaustive over basis pairs
  bool frame_ok = false;                 ///< t(v_s)=0, n(v_s)=1, t(v_s v_t^c)=0
  bool associative = false;              ///< all basis associators vanish
  double submultiplicativity = 0.0;      ///< max |xy| / (|x||y|) over the sample
  int sample_count = 0;
  unsigned seed = 0;

  bool all_pass() const {
    return unity_ok && alternation_ok && moufang_ok && anti_involution_ok && frame_ok;
  }
};

AxiomReport check_algebra_axioms(const AlgebraSpec& spec, int sample_count = 64,
                                 unsigned seed = 42);

struct ConeReport {
  bool in_cone = false;
  bool trace_real = false;
  bool norm_real = false;
  Rational discriminant{0};  ///< scalar part of 4 n(x) - t(x)^2
};

ConeReport cone_membership(const ElementQ& x);

}  // namespace altmono
