#include "altmono/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace altmono {

namespace {

void require_compatible(const Polynomial& p, const Polynomial& q) {
  if (p.spec != q.spec || p.nvars != q.nvars)
    throw std::invalid_argument("polynomial operands are not compatible");
}

}  // namespace

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int t = 0;
    for (int v : e) t += v;
    d = std::max(d, t);
  }
  return d;
}

bool Polynomial::depends_on(int var) const {
  for (const auto& [e, c] : terms)
    if (e[var] > 0) return true;
  return false;
}

void Polynomial::add_term(const std::vector<int>& expo, const ElementQ& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(expo);
  if (it == terms.end()) {
    terms.emplace(expo, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Polynomial zero_polynomial(const AlgebraSpec& spec) { return Polynomial(spec, spec.dim_hyper); }

Polynomial constant_polynomial(const ElementQ& c) {
  Polynomial p(*c.spec, c.spec->dim_hyper);
  p.add_term(std::vector<int>(p.nvars, 0), c);
  return p;
}

Polynomial coordinate(const AlgebraSpec& spec, int var) {
  if (var < 0 || var >= spec.dim_hyper)
    throw std::invalid_argument("coordinate index out of frame range");
  Polynomial p(spec, spec.dim_hyper);
  std::vector<int> e(p.nvars, 0);
  e[var] = 1;
  p.add_term(e, basis<Rational>(spec, 0));
  return p;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_compatible(p, q);
  Polynomial r = p;
  for (const auto& [e, c] : q.terms) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_compatible(p, q);
  Polynomial r = p;
  for (const auto& [e, c] : q.terms) r.add_term(e, -c);
  return r;
}

Polynomial operator-(const Polynomial& p) {
  Polynomial r = p;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_compatible(p, q);
  Polynomial r(*p.spec, p.nvars);
  std::vector<int> e(p.nvars);
  for (const auto& [ea, ca] : p.terms)
    for (const auto& [eb, cb] : q.terms) {
      for (int i = 0; i < p.nvars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, mul(ca, cb));
    }
  return r;
}

Polynomial operator*(const Rational& k, const Polynomial& p) {
  if (k == 0) return Polynomial(*p.spec, p.nvars);
  Polynomial r = p;
  for (auto& [e, c] : r.terms) c = c * k;
  return r;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  return p.spec == q.spec && p.nvars == q.nvars && p.terms == q.terms;
}

Polynomial left_multiply(const ElementQ& a, const Polynomial& p) {
  Polynomial r(*p.spec, p.nvars);
  for (const auto& [e, c] : p.terms) r.add_term(e, mul(a, c));
  return r;
}

Polynomial right_multiply(const Polynomial& p, const ElementQ& a) {
  Polynomial r(*p.spec, p.nvars);
  for (const auto& [e, c] : p.terms) r.add_term(e, mul(c, a));
  return r;
}

Polynomial partial(const Polynomial& p, int var) {
  Polynomial r(*p.spec, p.nvars);
  std::vector<int> e(p.nvars);
  for (const auto& [expo, c] : p.terms) {
    if (expo[var] == 0) continue;
    e = expo;
    Rational mult(e[var]);
    e[var] -= 1;
    r.add_term(e, c * mult);
  }
  return r;
}

Polynomial partial_derivative(const Polynomial& p, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != p.nvars)
    throw std::invalid_argument("partial_derivative: index has wrong arity");
  Polynomial r = p;
  for (int var = 0; var < p.nvars; ++var)
    for (int i = 0; i < k[var]; ++i) r = partial(r, var);
  return r;
}

ElementQ evaluate(const Polynomial& p, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != p.nvars)
    throw std::invalid_argument("evaluate: point has wrong arity");
  ElementQ acc(*p.spec);
  for (const auto& [e, c] : p.terms) {
    Rational mono(1);
    for (int i = 0; i < p.nvars; ++i)
      for (int j = 0; j < e[i]; ++j) mono *= x[i];
    acc = acc + c * mono;
  }
  return acc;
}

ElementD evaluate(const Polynomial& p, const std::vector<double>& x) {
  return compile(p).eval(x.data());
}

CompiledPolynomial compile(const Polynomial& p) {
  CompiledPolynomial cp;
  cp.nvars = p.nvars;
  cp.dim_total = p.spec->dim_total;
  cp.spec = p.spec;
  for (const auto& [e, c] : p.terms) {
    cp.exponents.push_back(e);
    std::vector<double> cd(cp.dim_total);
    for (int i = 0; i < cp.dim_total; ++i) cd[i] = to_double(c.a[i]);
    cp.coeffs.push_back(std::move(cd));
  }
  return cp;
}

ElementD CompiledPolynomial::eval(const double* x) const {
  ElementD acc(*spec);
  for (size_t t = 0; t < exponents.size(); ++t) {
    double mono = 1.0;
    const auto& e = exponents[t];
    for (int i = 0; i < nvars; ++i)
      for (int j = 0; j < e[i]; ++j) mono *= x[i];
    const auto& c = coeffs[t];
    for (int i = 0; i < dim_total; ++i) acc.a[i] += mono * c[i];
  }
  return acc;
}

Polynomial fueter_variable(const AlgebraSpec& spec, int l) {
  if (l < 1 || l > spec.m()) throw std::invalid_argument("fueter_variable index out of range");
  Polynomial z = coordinate(spec, l);
  Polynomial x0v = coordinate(spec, 0);
  return z - right_multiply(x0v, basis<Rational>(spec, l));
}

BigInt multi_factorial(const std::vector<int>& k) {
  BigInt f = 1;
  for (int v : k) f *= factorial(v);
  return f;
}

Polynomial fueter_polynomial(const AlgebraSpec& spec, const std::vector<int>& k, Assoc assoc) {
  if (static_cast<int>(k.size()) != spec.m())
    throw std::invalid_argument("fueter_polynomial: index must have m slots");
  for (int v : k)
    if (v < 0) throw std::invalid_argument("fueter_polynomial: negative exponent");

  int total = 0;
  for (int v : k) total += v;
  if (total == 0) return constant_polynomial(basis<Rational>(spec, 0));

  std::vector<int> word;  // multiset of variable labels, sorted
  for (size_t i = 0; i < k.size(); ++i)
    for (int j = 0; j < k[i]; ++j) word.push_back(static_cast<int>(i) + 1);

  std::vector<Polynomial> z;
  z.reserve(spec.m() + 1);
  z.push_back(zero_polynomial(spec));  // placeholder for index 0
  for (int l = 1; l <= spec.m(); ++l) z.push_back(fueter_variable(spec, l));

  Polynomial sum = zero_polynomial(spec);
  do {
    Polynomial prod;
    if (assoc == Assoc::right_to_left) {
      prod = z[word.back()];
      for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) prod = z[word[i]] * prod;
    } else {
      prod = z[word.front()];
      for (size_t i = 1; i < word.size(); ++i) prod = prod * z[word[i]];
    }
    sum = sum + prod;
  } while (std::next_permutation(word.begin(), word.end()));

  Rational scale(BigInt(1), factorial(total));
  return scale * sum;
}

namespace {

Polynomial stack_frame_units(const Polynomial& p, Side side) {
  // sum_s v_s (d_s p) or sum_s (d_s p) v_s over s = 1..m only.
  Polynomial acc(*p.spec, p.nvars);
  for (int s = 1; s <= p.spec->m(); ++s) {
    Polynomial d = partial(p, s);
    ElementQ v = basis<Rational>(*p.spec, s);
    acc = acc + (side == Side::left ? left_multiply(v, d) : right_multiply(d, v));
  }
  return acc;
}

}  // namespace

Polynomial ck_extension(const AlgebraSpec& spec, const Polynomial& f0, Side side) {
  if (f0.spec != &spec) throw std::invalid_argument("ck_extension: spec mismatch");
  if (f0.depends_on(0)) throw std::invalid_argument("ck_extension: input depends on x_0");

  Polynomial x0 = coordinate(spec, 0);
  Polynomial acc = zero_polynomial(spec);
  Polynomial derivative = f0;  // D^j f0
  Polynomial x0_power = constant_polynomial(basis<Rational>(spec, 0));
  BigInt jfact = 1;
  for (int j = 0; !derivative.is_zero(); ++j) {
    if (j > 0) {
      x0_power = x0_power * x0;
      jfact *= j;
    }
    Rational scale(((j % 2 == 0) ? BigInt(1) : BigInt(-1)), jfact);
    acc = acc + scale * (x0_power * derivative);
    derivative = stack_frame_units(derivative, side);
  }
  return acc;
}

Polynomial apply_operator(PolyOperator op, const Polynomial& p) {
  switch (op) {
    case PolyOperator::dbar_left:
      return partial(p, 0) + stack_frame_units(p, Side::left);
    case PolyOperator::dbar_right:
      return partial(p, 0) + stack_frame_units(p, Side::right);
    case PolyOperator::dconj_left:
      return partial(p, 0) - stack_frame_units(p, Side::left);
    case PolyOperator::dconj_right:
      return partial(p, 0) - stack_frame_units(p, Side::right);
    case PolyOperator::laplacian: {
      Polynomial acc(*p.spec, p.nvars);
      for (int s = 0; s < p.nvars; ++s) acc = acc + partial(partial(p, s), s);
      return acc;
    }
  }
  throw std::invalid_argument("unknown operator");
}

std::vector<std::vector<int>> multi_indices_of_degree(int slots, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(slots, 0);
  // lexicographic descent: distribute `total` over `slots`
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == slots - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (slots >= 1) rec(rec, 0, total);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<std::vector<int>> multi_indices_up_to(int slots, int cap) {
  std::vector<std::vector<int>> out;
  for (int total = 0; total <= cap; ++total) {
    auto level = multi_indices_of_degree(slots, total);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace altmono
