#include "altmono/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace altmono {

SurfaceConstant surface_area_sigma(int m) {
  if (m < 1) throw std::invalid_argument("surface_area_sigma: m must be >= 1");
  SurfaceConstant sc;
  sc.m = m;
  // 2 pi^{(m+1)/2} / Gamma((m+1)/2) with the Gamma value in closed form.
  if ((m + 1) % 2 == 0) {
    int t = (m + 1) / 2;  // Gamma(t) = (t-1)!
    sc.coef = Rational(BigInt(2), factorial(t - 1));
    sc.pi_power = t;
  } else {
    int t = m / 2;  // Gamma(t + 1/2) = (2t)! sqrt(pi) / (4^t t!)
    BigInt four_t = BigInt(1) << (2 * t);
    sc.coef = Rational(2 * four_t * factorial(t), factorial(2 * t));
    sc.pi_power = t;
  }
  sc.value = PiScaled{sc.coef, sc.pi_power}.value();
  return sc;
}

RadialRationalFunction cauchy_kernel(const AlgebraSpec& spec) {
  RadialRationalFunction f;
  f.spec = &spec;
  f.m = spec.m();
  f.prefactor = surface_area_sigma(f.m).symbolic().inverse();

  Polynomial num(spec, spec.dim_hyper);
  std::vector<int> e(spec.dim_hyper, 0);
  for (int s = 0; s < spec.dim_hyper; ++s) {
    std::fill(e.begin(), e.end(), 0);
    e[s] = 1;
    num.add_term(e, conjugate(basis<Rational>(spec, s)));
  }
  f.numerators[0] = num;
  return f;
}

namespace {

void require_same_shape(const RadialRationalFunction& f, const RadialRationalFunction& g) {
  if (f.spec != g.spec || f.m != g.m)
    throw std::invalid_argument("radial function operands are not compatible");
}

/// Divide p by |x|^2 = x_0^2 + ... + x_m^2 under grlex with leading term
/// x_0^2: p = q * |x|^2 + r where no monomial of r is divisible by x_0^2.
void divide_by_radius_sq(const Polynomial& p, Polynomial& quotient, Polynomial& remainder) {
  const int nv = p.nvars;
  quotient = Polynomial(*p.spec, nv);
  remainder = p;
  for (;;) {
    // pick the grlex-largest monomial divisible by x_0^2
    auto it = remainder.terms.rbegin();
    while (it != remainder.terms.rend() && it->first[0] < 2) ++it;
    if (it == remainder.terms.rend()) break;
    std::vector<int> e = it->first;
    ElementQ c = it->second;
    e[0] -= 2;
    quotient.add_term(e, c);
    // subtract c * x^e * |x|^2
    std::vector<int> f = e;
    f[0] += 2;
    remainder.add_term(f, -c);
    for (int s = 1; s < nv; ++s) {
      f = e;
      f[s] += 2;
      remainder.add_term(f, -c);
    }
  }
}

}  // namespace

RadialRationalFunction canonicalize(const RadialRationalFunction& f) {
  RadialRationalFunction out;
  out.spec = f.spec;
  out.m = f.m;
  out.prefactor = f.prefactor;
  if (f.prefactor.coef == 0) return out;

  std::map<int, Polynomial> work = f.numerators;
  while (!work.empty()) {
    int j = work.rbegin()->first;
    Polynomial p = work.rbegin()->second;
    work.erase(j);
    if (p.is_zero()) continue;
    Polynomial q, r;
    divide_by_radius_sq(p, q, r);
    if (!r.is_zero()) out.numerators.emplace(j, std::move(r));
    if (!q.is_zero()) {
      auto it = work.find(j - 1);
      if (it == work.end())
        work.emplace(j - 1, std::move(q));
      else
        it->second = it->second + q;
    }
  }
  return out;
}

bool is_zero(const RadialRationalFunction& f) { return canonicalize(f).numerators.empty(); }

bool equal(const RadialRationalFunction& f, const RadialRationalFunction& g) {
  return is_zero(f - g);
}

namespace {

/// Merge g into f after aligning prefactors; assumes compatible shapes.
RadialRationalFunction combine(const RadialRationalFunction& f, const RadialRationalFunction& g,
                               int sign) {
  require_same_shape(f, g);
  RadialRationalFunction out = f;
  if (g.prefactor.coef == 0) return out;
  Rational rescale;
  if (out.prefactor.coef == 0) {
    out.prefactor = g.prefactor;
    out.numerators.clear();
    rescale = Rational(sign);
  } else {
    if (out.prefactor.pi_power != g.prefactor.pi_power)
      throw std::invalid_argument("radial function sum with mismatched pi powers");
    rescale = Rational(sign) * g.prefactor.coef / out.prefactor.coef;
  }
  for (const auto& [j, p] : g.numerators) {
    Polynomial scaled = rescale * p;
    auto it = out.numerators.find(j);
    if (it == out.numerators.end()) {
      out.numerators.emplace(j, std::move(scaled));
    } else {
      it->second = it->second + scaled;
      if (it->second.is_zero()) out.numerators.erase(it);
    }
  }
  return out;
}

}  // namespace

RadialRationalFunction operator+(const RadialRationalFunction& f, const RadialRationalFunction& g) {
  return combine(f, g, 1);
}

RadialRationalFunction operator-(const RadialRationalFunction& f, const RadialRationalFunction& g) {
  return combine(f, g, -1);
}

RadialRationalFunction operator-(const RadialRationalFunction& f) {
  RadialRationalFunction out = f;
  out.prefactor = -out.prefactor;
  return out;
}

RadialRationalFunction radial_partial(const RadialRationalFunction& f, int s) {
  if (s < 0 || s > f.m) throw std::invalid_argument("radial_partial: variable out of range");
  RadialRationalFunction out;
  out.spec = f.spec;
  out.m = f.m;
  out.prefactor = f.prefactor;
  for (const auto& [j, p] : f.numerators) {
    Polynomial dp = partial(p, s);
    if (!dp.is_zero()) {
      auto it = out.numerators.find(j);
      if (it == out.numerators.end())
        out.numerators.emplace(j, dp);
      else
        it->second = it->second + dp;
    }
    // d|x|^{-(m+1+2j)} = -(m+1+2j) x_s |x|^{-(m+1+2(j+1))}
    Polynomial xs = coordinate(*f.spec, s);
    Polynomial down = Rational(-(f.m + 1 + 2 * j)) * (xs * p);
    if (!down.is_zero()) {
      auto it = out.numerators.find(j + 1);
      if (it == out.numerators.end())
        out.numerators.emplace(j + 1, std::move(down));
      else
        it->second = it->second + down;
    }
  }
  return canonicalize(out);
}

RadialRationalFunction differentiate_kernel(const RadialRationalFunction& f,
                                            const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != f.m + 1)
    throw std::invalid_argument("differentiate_kernel: index has wrong arity");
  RadialRationalFunction out = canonicalize(f);
  for (int s = 0; s <= f.m; ++s)
    for (int i = 0; i < k[s]; ++i) out = -radial_partial(out, s);
  return out;
}

namespace {

RadialRationalFunction map_coeffs(const RadialRationalFunction& f,
                                  const std::function<ElementQ(const ElementQ&)>& fn) {
  RadialRationalFunction out;
  out.spec = f.spec;
  out.m = f.m;
  out.prefactor = f.prefactor;
  for (const auto& [j, p] : f.numerators) {
    Polynomial q(*f.spec, p.nvars);
    for (const auto& [e, c] : p.terms) q.add_term(e, fn(c));
    if (!q.is_zero()) out.numerators.emplace(j, std::move(q));
  }
  return out;
}

}  // namespace

RadialRationalFunction dbar_left(const RadialRationalFunction& f) {
  RadialRationalFunction acc;
  acc.spec = f.spec;
  acc.m = f.m;
  acc.prefactor = f.prefactor;
  for (int s = 0; s <= f.m; ++s) {
    ElementQ v = basis<Rational>(*f.spec, s);
    acc = acc + map_coeffs(radial_partial(f, s), [&](const ElementQ& c) { return mul(v, c); });
  }
  return canonicalize(acc);
}

RadialRationalFunction dbar_right(const RadialRationalFunction& f) {
  RadialRationalFunction acc;
  acc.spec = f.spec;
  acc.m = f.m;
  acc.prefactor = f.prefactor;
  for (int s = 0; s <= f.m; ++s) {
    ElementQ v = basis<Rational>(*f.spec, s);
    acc = acc + map_coeffs(radial_partial(f, s), [&](const ElementQ& c) { return mul(c, v); });
  }
  return canonicalize(acc);
}

RadialRationalFunction laplacian(const RadialRationalFunction& f) {
  RadialRationalFunction acc;
  acc.spec = f.spec;
  acc.m = f.m;
  acc.prefactor = f.prefactor;
  for (int s = 0; s <= f.m; ++s) acc = acc + radial_partial(radial_partial(f, s), s);
  return canonicalize(acc);
}

RadialRationalFunction right_multiply(const RadialRationalFunction& f, const ElementQ& a) {
  return map_coeffs(f, [&](const ElementQ& c) { return mul(c, a); });
}

RadialRationalFunction left_multiply(const ElementQ& a, const RadialRationalFunction& f) {
  return map_coeffs(f, [&](const ElementQ& c) { return mul(a, c); });
}

RadialRationalFunction component(const RadialRationalFunction& f, int s) {
  if (s < 0 || s >= f.spec->dim_total)
    throw std::invalid_argument("component index out of range");
  return map_coeffs(f, [&](const ElementQ& c) {
    return scalar_element(*f.spec, c.a[s]);
  });
}

ExactRadialValue exact_value(const RadialRationalFunction& f, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != f.m + 1)
    throw std::invalid_argument("exact_value: point has wrong arity");
  ExactRadialValue out;
  out.prefactor = f.prefactor;
  Rational r2(0);
  for (const Rational& c : x) r2 += c * c;
  if (r2 == 0) throw std::domain_error("exact_value: singular at the origin");
  out.radius_sq = r2;
  int top = f.numerators.empty() ? 0 : f.numerators.rbegin()->first;
  out.level = top;
  ElementQ acc(*f.spec);
  for (const auto& [j, p] : f.numerators) {
    Rational shell(1);
    for (int i = 0; i < top - j; ++i) shell *= r2;
    acc = acc + evaluate(p, x) * shell;
  }
  out.profile = acc;
  return out;
}

ElementD evaluate_radial(const RadialRationalFunction& f, const std::vector<double>& x) {
  return compile_radial(f).eval(x.data());
}

ElementD CompiledRadial::eval(const double* x) const {
  double r2 = 0;
  for (int i = 0; i <= m; ++i) r2 += x[i] * x[i];
  if (r2 == 0) throw std::domain_error("radial function evaluated at its singularity");
  double r = std::sqrt(r2);
  ElementD acc(*spec);
  for (const auto& [j, cp] : levels) {
    double scale = prefactor * std::pow(r, -(m + 1 + 2 * j));
    ElementD val = cp.eval(x);
    for (int i = 0; i < spec->dim_total; ++i) acc.a[i] += scale * val.a[i];
  }
  return acc;
}

CompiledRadial compile_radial(const RadialRationalFunction& f) {
  CompiledRadial cr;
  cr.spec = f.spec;
  cr.m = f.m;
  cr.prefactor = f.prefactor.value();
  for (const auto& [j, p] : f.numerators) cr.levels.emplace_back(j, compile(p));
  return cr;
}

std::map<std::vector<int>, RadialRationalFunction, GrlexLess> kernel_table(const AlgebraSpec& spec,
                                                                           int cap,
                                                                           bool include_x0) {
  std::map<std::vector<int>, RadialRationalFunction, GrlexLess> table;
  const int m = spec.m();
  std::vector<int> zero_idx(m + 1, 0);
  table.emplace(zero_idx, canonicalize(cauchy_kernel(spec)));
  for (int total = 1; total <= cap; ++total) {
    for (const auto& k : multi_indices_of_degree(m + 1, total)) {
      if (!include_x0 && k[0] > 0) continue;
      // find a predecessor k - e_s already in the table
      for (int s = 0; s <= m; ++s) {
        if (k[s] == 0) continue;
        std::vector<int> prev = k;
        prev[s] -= 1;
        auto it = table.find(prev);
        if (it == table.end()) continue;
        table.emplace(k, -radial_partial(it->second, s));
        break;
      }
    }
  }
  return table;
}

}  // namespace altmono
