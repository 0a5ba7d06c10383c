#include "altmono/integral.hpp"

#include <cmath>
#include <stdexcept>

namespace altmono {

SampledFunction sampled(const Polynomial& p) {
  CompiledPolynomial cp = compile(p);
  return [cp = std::move(cp)](const double* y) { return cp.eval(y); };
}

FramedField framed_field(const Polynomial& p) {
  FramedField field;
  field.value = sampled(p);
  for (int s = 0; s < p.nvars; ++s) field.partials.push_back(sampled(partial(p, s)));
  return field;
}

namespace {

double dist(const double* a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(d);
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  return dist(a.data(), b);
}

/// Signed for interior points, |.|-folded for use as the shell guard.
double shell_distance(const QuadratureRule& rule, const std::vector<double>& x) {
  return std::abs(dist(x, rule.center) - rule.radius);
}

ElementD richardson_partial(const std::function<ElementD(const std::vector<double>&)>& field,
                            const std::vector<double>& x, int s, double h) {
  auto central = [&](double step) {
    std::vector<double> hi = x, lo = x;
    hi[s] += step;
    lo[s] -= step;
    ElementD d = field(hi) - field(lo);
    return (1.0 / (2.0 * step)) * d;
  };
  ElementD coarse = central(h);
  ElementD fine = central(h / 2.0);
  return (1.0 / 3.0) * (4.0 * fine - coarse);
}

QuadratureRule halved(const QuadratureRule& rule) {
  return build_quadrature(rule.kind, rule.center, rule.radius, rule.m, rule.resolution / 2,
                          rule.seed);
}

/// Core boundary sweep shared by the Cauchy integral/transform and the
/// derivative formula: kernel(y - x) times (n(y) f(y)).
ElementD kernel_sweep(const QuadratureRule& boundary, const CompiledRadial& kernel,
                      const SampledFunction& f, const std::vector<double>& x) {
  const int n = boundary.m + 1;
  std::vector<double> diff(n);
  ElementD probe = f(boundary.node(0));
  const AlgebraSpec& spec = *probe.spec;
  detail::BlockAccumulator acc(spec.dim_total);
  ElementD normal(spec);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const double* y = boundary.node(i);
    const double* nv = boundary.normal(i);
    for (int c = 0; c < n; ++c) diff[c] = y[c] - x[c];
    for (int c = 0; c < spec.dim_total; ++c) normal.a[c] = c < n ? nv[c] : 0.0;
    ElementD fy = i == 0 ? probe : f(y);
    acc.add(mul(kernel.eval(diff.data()), mul(normal, fy)), boundary.weights[i]);
  }
  return acc.finish(spec);
}

EvalResult boundary_formula(const QuadratureRule& boundary, const RadialRationalFunction& kernel,
                            const SampledFunction& f, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != boundary.m + 1)
    throw std::invalid_argument("evaluation point has wrong dimension");
  CompiledRadial ck = compile_radial(kernel);
  EvalResult out{kernel_sweep(boundary, ck, f, x), true, 0.0};
  out.reliable = shell_distance(boundary, x) >= 0.1 * boundary.radius;
  if (boundary.resolution >= 8) {
    ElementD coarse = kernel_sweep(halved(boundary), ck, f, x);
    out.error_estimate = euclidean_norm(out.value - coarse);
  }
  return out;
}

void require_pv_geometry(const QuadratureRule& volume, const std::vector<double>& x,
                         double epsilon) {
  if (static_cast<int>(x.size()) != volume.m + 1)
    throw std::invalid_argument("evaluation point has wrong dimension");
  double interior_gap = volume.radius - dist(x, volume.center);
  if (interior_gap <= 0.0)
    throw std::invalid_argument("principal-value evaluation needs an interior point");
  if (epsilon <= 0.0 || epsilon >= interior_gap / 2.0)
    throw std::invalid_argument("epsilon must lie in (0, dist(x, shell)/2)");
}

ElementD pompeiu_volume_term(const QuadratureRule& volume, const CompiledRadial& kernel,
                             const SampledFunction& dbar_f, const std::vector<double>& x,
                             double epsilon) {
  const int n = volume.m + 1;
  std::vector<double> diff(n);
  ElementD probe = dbar_f(volume.node(0));
  const AlgebraSpec& spec = *probe.spec;
  detail::BlockAccumulator acc(spec.dim_total);
  for (std::size_t i = 0; i < volume.size(); ++i) {
    const double* y = volume.node(i);
    if (dist(y, x) <= epsilon) continue;
    for (int c = 0; c < n; ++c) diff[c] = y[c] - x[c];
    acc.add(mul(kernel.eval(diff.data()), i == 0 ? probe : dbar_f(y)), volume.weights[i]);
  }
  return acc.finish(spec);
}

ElementD teodorescu_sweep(const QuadratureRule& volume, const CompiledRadial& kernel,
                          const SampledFunction& f, const std::vector<double>& x,
                          double epsilon) {
  const int n = volume.m + 1;
  std::vector<double> diff(n);
  ElementD fx = f(x.data());
  const AlgebraSpec& spec = *fx.spec;
  detail::BlockAccumulator acc(spec.dim_total);
  for (std::size_t i = 0; i < volume.size(); ++i) {
    const double* y = volume.node(i);
    if (dist(y, x) <= epsilon) continue;
    for (int c = 0; c < n; ++c) diff[c] = y[c] - x[c];
    acc.add(mul(kernel.eval(diff.data()), f(y) - fx), volume.weights[i]);
  }
  ElementD pv = acc.finish(spec);

  // exact moment of the kernel over the whole ball: -(x - c)^c / (m+1)
  ElementD folded(spec);
  folded.a[0] = (x[0] - volume.center[0]) / (volume.m + 1);
  for (int s = 1; s <= volume.m; ++s) folded.a[s] = -(x[s] - volume.center[s]) / (volume.m + 1);
  return mul(folded, fx) - pv;
}

}  // namespace

ElementD fd_dbar_left(const std::function<ElementD(const std::vector<double>&)>& field,
                      const AlgebraSpec& spec, const std::vector<double>& x, double h) {
  ElementD acc(spec);
  for (std::size_t s = 0; s < x.size(); ++s)
    acc = acc + mul(basis<double>(spec, static_cast<int>(s)), richardson_partial(field, x, s, h));
  return acc;
}

ElementD fd_d_left(const std::function<ElementD(const std::vector<double>&)>& field,
                   const AlgebraSpec& spec, const std::vector<double>& x, double h) {
  ElementD acc = richardson_partial(field, x, 0, h);
  for (std::size_t s = 1; s < x.size(); ++s)
    acc = acc - mul(basis<double>(spec, static_cast<int>(s)), richardson_partial(field, x, s, h));
  return acc;
}

EvalResult cauchy_integral(const QuadratureRule& boundary, const SampledFunction& f,
                           const std::vector<double>& x) {
  return cauchy_transform(boundary, f, x);
}

EvalResult cauchy_transform(const QuadratureRule& boundary, const SampledFunction& f,
                            const std::vector<double>& x) {
  ElementD probe = f(boundary.node(0));
  return boundary_formula(boundary, canonicalize(cauchy_kernel(*probe.spec)), f, x);
}

EvalResult cauchy_pompeiu(const QuadratureRule& boundary, const QuadratureRule& volume,
                          const SampledFunction& f, const SampledFunction& dbar_f,
                          const std::vector<double>& x, double epsilon) {
  require_pv_geometry(volume, x, epsilon);
  ElementD probe = f(boundary.node(0));
  const AlgebraSpec& spec = *probe.spec;
  CompiledRadial kernel = compile_radial(canonicalize(cauchy_kernel(spec)));

  EvalResult out;
  out.value = kernel_sweep(boundary, kernel, f, x) -
              pompeiu_volume_term(volume, kernel, dbar_f, x, epsilon);
  out.reliable = shell_distance(volume, x) >= 0.1 * volume.radius;
  if (boundary.resolution >= 8 && volume.resolution >= 8) {
    ElementD coarse = kernel_sweep(halved(boundary), kernel, f, x) -
                      pompeiu_volume_term(halved(volume), kernel, dbar_f, x, epsilon);
    out.error_estimate = euclidean_norm(out.value - coarse);
  }
  return out;
}

EvalResult teodorescu(const QuadratureRule& volume, const SampledFunction& f,
                      const std::vector<double>& x, double epsilon) {
  require_pv_geometry(volume, x, epsilon);
  ElementD fx = f(x.data());
  const AlgebraSpec& spec = *fx.spec;
  CompiledRadial kernel = compile_radial(canonicalize(cauchy_kernel(spec)));

  EvalResult out;
  out.value = teodorescu_sweep(volume, kernel, f, x, epsilon);
  out.reliable = shell_distance(volume, x) >= 0.1 * volume.radius;
  if (volume.resolution >= 8) {
    ElementD coarse = teodorescu_sweep(halved(volume), kernel, f, x, epsilon);
    out.error_estimate = euclidean_norm(out.value - coarse);
  }
  return out;
}

EvalResult derivative_formula(const QuadratureRule& boundary, const SampledFunction& f,
                              const std::vector<int>& k) {
  ElementD probe = f(boundary.node(0));
  const AlgebraSpec& spec = *probe.spec;
  std::vector<double> origin(boundary.m + 1, 0.0);
  EvalResult out = boundary_formula(boundary, differentiate_kernel(cauchy_kernel(spec), k), f,
                                    origin);
  if (dist(origin, boundary.center) >= boundary.radius) out.reliable = false;
  return out;
}

ElementD mean_value(const std::vector<double>& center, double radius, const SampledFunction& f,
                    int resolution) {
  int m = static_cast<int>(center.size()) - 1;
  QuadratureRule rule = build_quadrature(RuleKind::sphere_surface, center, radius, m, resolution);
  ElementD total = integrate(rule, f);
  double area = surface_area_sigma(m).value * std::pow(radius, m);
  return (1.0 / area) * total;
}

double gauss_residual(const QuadratureRule& boundary, const QuadratureRule& volume,
                      const FramedField& phi, const FramedField& f, bool include_associator) {
  ElementD probe = phi.value(boundary.node(0));
  const AlgebraSpec& spec = *probe.spec;
  const int m = boundary.m;
  if (static_cast<int>(phi.partials.size()) != m + 1 ||
      static_cast<int>(f.partials.size()) != m + 1)
    throw std::invalid_argument("gauss_residual: fields need m+1 partial callbacks");

  ElementD lhs = integrate(
      boundary, std::function<ElementD(const double*, const double*)>(
                    [&](const double* y, const double* nv) {
                      ElementD normal(spec);
                      for (int c = 0; c <= m; ++c) normal.a[c] = nv[c];
                      return mul(phi.value(y), mul(normal, f.value(y)));
                    }));

  SampledFunction integrand = [&](const double* y) {
    ElementD fy = f.value(y);
    std::vector<ElementD> dphi, df;
    for (int s = 0; s <= m; ++s) {
      dphi.push_back(phi.partials[s](y));
      df.push_back(f.partials[s](y));
    }
    ElementD acc(spec);
    // (phi dbar) f: the operator acts from the right on phi first
    for (int s = 0; s <= m; ++s)
      acc = acc + mul(mul(dphi[s], basis<double>(spec, s)), fy);
    // phi (dbar f)
    ElementD dbar_f(spec);
    for (int s = 0; s <= m; ++s) dbar_f = dbar_f + mul(basis<double>(spec, s), df[s]);
    acc = acc + mul(phi.value(y), dbar_f);
    if (include_associator) {
      // sum_s [v_s, dbar phi_s, f] with phi_s the s-th real component
      for (int s = 0; s <= m; ++s) {
        ElementD dbar_phi_s(spec);
        for (int t = 0; t <= m; ++t) dbar_phi_s.a[t] = dphi[t].a[s];
        acc = acc - associator(basis<double>(spec, s), dbar_phi_s, fy);
      }
    }
    return acc;
  };
  ElementD rhs = integrate(volume, integrand);
  return euclidean_norm(lhs - rhs);
}

ElementD taylor_evaluate(const AlgebraSpec& spec,
                         const std::map<std::vector<int>, ElementD, GrlexLess>& derivs_at_0,
                         const std::vector<double>& x, int degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("taylor_evaluate: negative degree cap");
  const int m = spec.m();
  if (static_cast<int>(x.size()) != m + 1)
    throw std::invalid_argument("taylor_evaluate: point has wrong dimension");
  ElementD acc(spec);
  for (int total = 0; total <= degree_cap; ++total) {
    for (const std::vector<int>& k : multi_indices_of_degree(m, total)) {
      auto it = derivs_at_0.find(k);
      if (it == derivs_at_0.end())
        throw std::invalid_argument("taylor_evaluate: missing derivative entry");
      ElementD pk = evaluate(fueter_polynomial(spec, k), x);
      acc = acc + mul(pk, it->second);
    }
  }
  return acc;
}

}  // namespace altmono
