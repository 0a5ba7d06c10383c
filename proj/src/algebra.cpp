#include "altmono/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

namespace altmono {

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("bad rational literal: " + std::string(text)); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) bad();
    if (s[0] == '+') s.remove_prefix(1);
    size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) bad();
    for (size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') bad();
    return BigInt(std::string(s));
  };
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
  }
  return Rational(num, den);
}

void AlgebraSpec::index_nonzero() {
  nonzero.clear();
  for (int s = 0; s < dim_total; ++s)
    for (int t = 0; t < dim_total; ++t)
      for (int u = 0; u < dim_total; ++u) {
        const Rational& v = c(s, t, u);
        if (v != 0) nonzero.push_back({s, t, u, v, to_double(v)});
      }
}

namespace {

AlgebraSpec make_empty(std::string name, int n, int m_plus_1) {
  AlgebraSpec spec;
  spec.name = std::move(name);
  spec.dim_total = n;
  spec.dim_hyper = m_plus_1;
  spec.structure.assign(static_cast<size_t>(n) * n * n, Rational(0));
  spec.involution_sign.assign(n, 1);
  return spec;
}

// Quaternion basis (1, i, j, k) as signed index pairs: table[s][t] = (sign, index).
struct SignedIdx {
  int sign;
  int idx;
};

SignedIdx quat_table(int s, int t) {
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {sgn[s][t], idx[s][t]};
}

SignedIdx quat_conj(int s) { return {s == 0 ? 1 : -1, s}; }

AlgebraSpec build_complex() {
  AlgebraSpec spec = make_empty("complex", 2, 2);
  spec.c_mut(0, 0, 0) = 1;
  spec.c_mut(0, 1, 1) = 1;
  spec.c_mut(1, 0, 1) = 1;
  spec.c_mut(1, 1, 0) = -1;
  spec.involution_sign = {1, -1};
  spec.index_nonzero();
  return spec;
}

AlgebraSpec build_quaternion(int frame_m) {
  AlgebraSpec spec = make_empty("quaternion", 4, frame_m + 1);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      SignedIdx r = quat_table(s, t);
      spec.c_mut(s, t, r.idx) = r.sign;
    }
  spec.involution_sign = {1, -1, -1, -1};
  spec.index_nonzero();
  return spec;
}

// Cayley-Dickson doubling of the quaternions:
//   (a,b)(c,d) = (ac - d^c b, da + b c^c),  (a,b)^c = (a^c, -b).
// Basis element p = q + 4h encodes (quaternion index q, half h).
AlgebraSpec build_octonion(int frame_m) {
  AlgebraSpec spec = make_empty("octonion", 8, frame_m + 1);
  for (int p1 = 0; p1 < 8; ++p1)
    for (int p2 = 0; p2 < 8; ++p2) {
      int q1 = p1 & 3, h1 = p1 >> 2;
      int q2 = p2 & 3, h2 = p2 >> 2;
      SignedIdx r{1, 0};
      int half = 0;
      if (h1 == 0 && h2 == 0) {
        r = quat_table(q1, q2);
        half = 0;
      } else if (h1 == 0 && h2 == 1) {
        r = quat_table(q2, q1);  // d a
        half = 1;
      } else if (h1 == 1 && h2 == 0) {
        SignedIdx cc = quat_conj(q2);  // b c^c
        r = quat_table(q1, cc.idx);
        r.sign *= cc.sign;
        half = 1;
      } else {
        SignedIdx dc = quat_conj(q2);  // -(d^c b)
        r = quat_table(dc.idx, q1);
        r.sign *= -dc.sign;
        half = 0;
      }
      spec.c_mut(p1, p2, r.idx + 4 * half) = r.sign;
    }
  spec.involution_sign = {1, -1, -1, -1, -1, -1, -1, -1};
  spec.index_nonzero();
  return spec;
}

// Blades of Cl(0,m) ordered by (grade, bitmask), so indices 1..m are the
// generators e_1..e_m and the hypercomplex frame is (1, e_1, ..., e_m).
AlgebraSpec build_clifford(int gens) {
  const int n = 1 << gens;
  AlgebraSpec spec = make_empty("clifford_0_" + std::to_string(gens), n, gens + 1);

  std::vector<int> mask_of_index;
  mask_of_index.reserve(n);
  for (int g = 0; g <= gens; ++g)
    for (int mask = 0; mask < n; ++mask)
      if (std::popcount(static_cast<unsigned>(mask)) == g) mask_of_index.push_back(mask);
  std::vector<int> index_of_mask(n);
  for (int i = 0; i < n; ++i) index_of_mask[mask_of_index[i]] = i;

  auto reorder_sign = [](unsigned A, unsigned B) {
    int swaps = 0;
    for (unsigned bits = B; bits != 0; bits &= bits - 1) {
      int i = std::countr_zero(bits);
      swaps += std::popcount(A >> (i + 1));
    }
    return (swaps % 2 == 0) ? 1 : -1;
  };

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      unsigned A = static_cast<unsigned>(mask_of_index[s]);
      unsigned B = static_cast<unsigned>(mask_of_index[t]);
      int sign = reorder_sign(A, B);
      if (std::popcount(A & B) % 2 == 1) sign = -sign;  // e_i e_i = -1
      spec.c_mut(s, t, index_of_mask[A ^ B]) = sign;
    }

  for (int i = 0; i < n; ++i) {
    int g = std::popcount(static_cast<unsigned>(mask_of_index[i]));
    spec.involution_sign[i] = (g * (g + 1) / 2) % 2 == 0 ? 1 : -1;
  }
  spec.index_nonzero();
  return spec;
}

// H + eps*H with eps^2 = 0 and eps central; conjugation extends the quaternion
// one eps-linearly, so eps^c = eps.
AlgebraSpec build_dual_quaternion() {
  AlgebraSpec spec = make_empty("dual_quaternion", 8, 4);
  for (int p1 = 0; p1 < 8; ++p1)
    for (int p2 = 0; p2 < 8; ++p2) {
      int q1 = p1 & 3, h1 = p1 >> 2;
      int q2 = p2 & 3, h2 = p2 >> 2;
      if (h1 + h2 >= 2) continue;
      SignedIdx r = quat_table(q1, q2);
      spec.c_mut(p1, p2, r.idx + 4 * (h1 + h2)) = r.sign;
    }
  spec.involution_sign = {1, -1, -1, -1, 1, -1, -1, -1};
  spec.index_nonzero();
  return spec;
}

}  // namespace

AlgebraSpec build_algebra(AlgebraKind kind, int m_param) {
  AlgebraSpec spec;
  switch (kind) {
    case AlgebraKind::complex_field:
      if (m_param != -1 && m_param != 1)
        throw std::invalid_argument("complex algebra has frame size m = 1");
      spec = build_complex();
      break;
    case AlgebraKind::quaternion: {
      int m = m_param == -1 ? 3 : m_param;
      if (m < 1 || m > 3) throw std::invalid_argument("quaternion frame m must be in 1..3");
      spec = build_quaternion(m);
      break;
    }
    case AlgebraKind::octonion: {
      int m = m_param == -1 ? 7 : m_param;
      if (m < 1 || m > 7) throw std::invalid_argument("octonion frame m must be in 1..7");
      spec = build_octonion(m);
      break;
    }
    case AlgebraKind::clifford: {
      if (m_param < 1) throw std::invalid_argument("clifford generator count m must be >= 1");
      if (m_param > 8) throw std::invalid_argument("clifford generator count m must be <= 8");
      spec = build_clifford(m_param);
      break;
    }
    case AlgebraKind::dual_quaternion:
      if (m_param != -1 && m_param != 3)
        throw std::invalid_argument("dual_quaternion frame is fixed to m = 3");
      spec = build_dual_quaternion();
      break;
    default:
      throw std::invalid_argument("unsupported algebra kind");
  }
  auto violations = spec.validate();
  if (!violations.empty())
    throw std::logic_error("builder produced invalid spec: " + violations.front());
  return spec;
}

std::optional<AlgebraKind> parse_algebra_kind(std::string_view name) {
  if (name == "complex") return AlgebraKind::complex_field;
  if (name == "quaternion") return AlgebraKind::quaternion;
  if (name == "octonion") return AlgebraKind::octonion;
  if (name == "clifford") return AlgebraKind::clifford;
  if (name == "dual_quaternion") return AlgebraKind::dual_quaternion;
  return std::nullopt;
}

std::string algebra_kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::complex_field: return "complex";
    case AlgebraKind::quaternion: return "quaternion";
    case AlgebraKind::octonion: return "octonion";
    case AlgebraKind::clifford: return "clifford";
    case AlgebraKind::dual_quaternion: return "dual_quaternion";
  }
  return "?";
}

std::vector<std::string> AlgebraSpec::validate() const {
  std::vector<std::string> bad;
  const int n = dim_total;
  if (n < 2 || dim_hyper < 2 || dim_hyper > n) {
    bad.push_back("dimensions out of range");
    return bad;
  }
  if (static_cast<int>(structure.size()) != n * n * n ||
      static_cast<int>(involution_sign.size()) != n) {
    bad.push_back("tensor or involution size mismatch");
    return bad;
  }

  for (int t = 0; t < n && bad.empty(); ++t)
    for (int u = 0; u < n; ++u) {
      Rational want = (t == u) ? 1 : 0;
      if (c(0, t, u) != want || c(t, 0, u) != want) {
        bad.push_back("v_0 is not a two-sided unity");
        break;
      }
    }

  if (involution_sign[0] != 1) bad.push_back("involution must fix the unity");
  for (int s = 1; s < dim_hyper; ++s)
    if (involution_sign[s] != -1) {
      bad.push_back("hypercomplex basis elements must flip under involution");
      break;
    }
  for (int s = 0; s < n; ++s)
    if (involution_sign[s] != 1 && involution_sign[s] != -1) {
      bad.push_back("involution signs must be +1 or -1");
      break;
    }
  if (!bad.empty()) return bad;

  auto basis_q = [&](int i) {
    ElementQ e(*this);
    e.a[i] = 1;
    return e;
  };

  // Anti-involution on all basis pairs.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      ElementQ lhs = conjugate(mul(basis_q(s), basis_q(t)));
      ElementQ rhs = mul(conjugate(basis_q(t)), conjugate(basis_q(s)));
      if (!(lhs == rhs)) {
        bad.push_back("involution is not an anti-involution on basis pair (" +
                      std::to_string(s) + "," + std::to_string(t) + ")");
        s = n;
        break;
      }
    }

  // Alternation on all basis triples; trilinearity makes this exhaustive.
  for (int s = 0; s < n && bad.empty(); ++s)
    for (int t = 0; t < n && bad.empty(); ++t)
      for (int u = 0; u < n; ++u) {
        ElementQ abc = associator(basis_q(s), basis_q(t), basis_q(u));
        ElementQ bac = associator(basis_q(t), basis_q(s), basis_q(u));
        ElementQ acb = associator(basis_q(s), basis_q(u), basis_q(t));
        if (!((abc + bac).is_zero() && (abc + acb).is_zero())) {
          bad.push_back("associator fails to alternate on basis triple (" + std::to_string(s) +
                        "," + std::to_string(t) + "," + std::to_string(u) + ")");
          break;
        }
      }

  // Hypercomplex frame: t(v_s) = 0, n(v_s) = 1, t(v_s v_t^c) = 0 for s != t.
  for (int s = 1; s < dim_hyper && bad.empty(); ++s) {
    if (!trace(basis_q(s)).is_zero()) bad.push_back("frame element has nonzero trace");
    ElementQ nq = norm_q(basis_q(s));
    ElementQ one = basis_q(0);
    if (!(nq == one)) bad.push_back("frame element does not have norm 1");
    for (int t = 1; t < dim_hyper; ++t) {
      if (t == s) continue;
      if (!trace(mul(basis_q(s), conjugate(basis_q(t)))).is_zero()) {
        bad.push_back("frame elements are not orthogonal under the trace form");
        break;
      }
    }
  }
  return bad;
}

ElementQ inverse_in_M(const ElementQ& x) {
  if (!in_hyper_subspace(x)) throw std::domain_error("inverse_in_M: element outside M");
  ElementQ n = norm_q(x);
  for (int i = 1; i < x.spec->dim_total; ++i)
    if (n.a[i] != 0) throw std::domain_error("inverse_in_M: norm is not real");
  if (n.a[0] == 0) throw std::domain_error("inverse_in_M: zero norm");
  Rational inv = Rational(1) / n.a[0];
  return conjugate(x) * inv;
}

double euclidean_norm(const ElementD& x) {
  double s = 0;
  for (double v : x.a) s += v * v;
  return std::sqrt(s);
}

double euclidean_norm(const ElementQ& x) {
  double s = 0;
  for (const Rational& v : x.a) {
    double d = to_double(v);
    s += d * d;
  }
  return std::sqrt(s);
}

ElementD to_double(const ElementQ& x) {
  ElementD r(*x.spec);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = to_double(x.a[i]);
  return r;
}

namespace {

ElementQ random_element(const AlgebraSpec& spec, std::mt19937& rng, bool in_M) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  ElementQ x(spec);
  int top = in_M ? spec.dim_hyper : spec.dim_total;
  for (int i = 0; i < top; ++i) x.a[i] = Rational(num(rng), den(rng));
  return x;
}

}  // namespace

AxiomReport check_algebra_axioms(const AlgebraSpec& spec, int sample_count, unsigned seed) {
  AxiomReport rep;
  rep.sample_count = sample_count;
  rep.seed = seed;

  const int n = spec.dim_total;
  auto basis_q = [&](int i) {
    ElementQ e(spec);
    e.a[i] = 1;
    return e;
  };

  rep.unity_ok = true;
  for (int t = 0; t < n && rep.unity_ok; ++t)
    for (int u = 0; u < n; ++u) {
      Rational want = (t == u) ? 1 : 0;
      if (spec.c(0, t, u) != want || spec.c(t, 0, u) != want) {
        rep.unity_ok = false;
        break;
      }
    }

  rep.alternation_ok = true;
  rep.associative = true;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) {
        ElementQ abc = associator(basis_q(s), basis_q(t), basis_q(u));
        if (!abc.is_zero()) rep.associative = false;
        ElementQ bac = associator(basis_q(t), basis_q(s), basis_q(u));
        ElementQ acb = associator(basis_q(s), basis_q(u), basis_q(t));
        if (!((abc + bac).is_zero() && (abc + acb).is_zero())) rep.alternation_ok = false;
      }

  rep.anti_involution_ok = true;
  for (int s = 0; s < n && rep.anti_involution_ok; ++s)
    for (int t = 0; t < n; ++t)
      if (!(conjugate(mul(basis_q(s), basis_q(t))) ==
            mul(conjugate(basis_q(t)), conjugate(basis_q(s))))) {
        rep.anti_involution_ok = false;
        break;
      }

  rep.frame_ok = true;
  for (int s = 1; s < spec.dim_hyper && rep.frame_ok; ++s) {
    if (!trace(basis_q(s)).is_zero() || !(norm_q(basis_q(s)) == basis_q(0))) rep.frame_ok = false;
    for (int t = 1; t < spec.dim_hyper; ++t)
      if (t != s && !trace(mul(basis_q(s), conjugate(basis_q(t)))).is_zero()) rep.frame_ok = false;
  }

  std::mt19937 rng(seed);
  rep.moufang_ok = true;
  for (int i = 0; i < sample_count; ++i) {
    ElementQ a = random_element(spec, rng, false);
    ElementQ b = random_element(spec, rng, false);
    ElementQ c = random_element(spec, rng, false);
    ElementQ aba = mul(mul(a, b), a);
    ElementQ m1 = mul(a, mul(b, mul(a, c))) - mul(aba, c);
    ElementQ m2 = mul(mul(mul(a, b), c), b) - mul(a, mul(mul(b, c), b));
    ElementQ m3 = mul(mul(a, b), mul(c, a)) - mul(mul(a, mul(b, c)), a);
    if (!(m1.is_zero() && m2.is_zero() && m3.is_zero())) {
      rep.moufang_ok = false;
      break;
    }
  }

  double worst = 0;
  for (int i = 0; i < sample_count; ++i) {
    ElementD x = to_double(random_element(spec, rng, true));
    ElementD y = to_double(random_element(spec, rng, false));
    double nx = euclidean_norm(x), ny = euclidean_norm(y);
    if (nx < 1e-12 || ny < 1e-12) continue;
    worst = std::max(worst, euclidean_norm(mul(x, y)) / (nx * ny));
  }
  rep.submultiplicativity = worst;
  return rep;
}

ConeReport cone_membership(const ElementQ& x) {
  ConeReport rep;
  ElementQ t = trace(x);
  ElementQ nq = norm_q(x);
  rep.trace_real = true;
  rep.norm_real = true;
  for (int i = 1; i < x.spec->dim_total; ++i) {
    if (t.a[i] != 0) rep.trace_real = false;
    if (nq.a[i] != 0) rep.norm_real = false;
  }
  rep.discriminant = 4 * nq.a[0] - t.a[0] * t.a[0];

  bool is_real = true;
  for (int i = 1; i < x.spec->dim_total; ++i)
    if (x.a[i] != 0) is_real = false;
  rep.in_cone = is_real || (rep.trace_real && rep.norm_real && rep.discriminant > 0);
  return rep;
}

}  // namespace altmono
