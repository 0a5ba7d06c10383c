#include "altmono/quadrature.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <stdexcept>

#include "altmono/kernel.hpp"

namespace altmono {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendre gl;
  std::vector<double> upper = boost::math::legendre_p_zeros<double>(n);
  // upper holds the non-negative zeros ascending; mirror them
  for (auto it = upper.rbegin(); it != upper.rend(); ++it)
    if (*it > 0.0) gl.nodes.push_back(-*it);
  for (double z : upper) gl.nodes.push_back(z);
  for (double z : gl.nodes) {
    double dp = boost::math::legendre_p_prime(n, z);
    gl.weights.push_back(2.0 / ((1.0 - z * z) * dp * dp));
  }
  return gl;
}

namespace {

struct UnitSphereGrid {
  std::vector<double> dirs;     // flat, stride m+1, unit vectors
  std::vector<double> weights;  // sums to sigma_m
};

/// Tensor Gauss-Legendre directions on the unit sphere of R^{m+1}, m <= 3.
/// Polar angles get `res` nodes each, the periodic angle 2*res trapezoid
/// nodes.
UnitSphereGrid unit_sphere_grid(int m, int res) {
  UnitSphereGrid g;
  const double step = M_PI / res;  // periodic angle spacing over [0, 2pi)
  if (m == 1) {
    for (int j = 0; j < 2 * res; ++j) {
      double phi = step * j;
      g.dirs.insert(g.dirs.end(), {std::cos(phi), std::sin(phi)});
      g.weights.push_back(step);
    }
    return g;
  }
  GaussLegendre gl = gauss_legendre(res);
  if (m == 2) {
    for (int a = 0; a < res; ++a) {
      double theta = M_PI * (gl.nodes[a] + 1.0) / 2.0;
      double wt = (M_PI / 2.0) * gl.weights[a] * std::sin(theta);
      for (int j = 0; j < 2 * res; ++j) {
        double phi = step * j;
        g.dirs.insert(g.dirs.end(),
                      {std::cos(theta), std::sin(theta) * std::cos(phi),
                       std::sin(theta) * std::sin(phi)});
        g.weights.push_back(wt * step);
      }
    }
    return g;
  }
  // m == 3
  for (int a = 0; a < res; ++a) {
    double psi = M_PI * (gl.nodes[a] + 1.0) / 2.0;
    double wa = (M_PI / 2.0) * gl.weights[a] * std::sin(psi) * std::sin(psi);
    for (int b = 0; b < res; ++b) {
      double theta = M_PI * (gl.nodes[b] + 1.0) / 2.0;
      double wb = (M_PI / 2.0) * gl.weights[b] * std::sin(theta);
      for (int j = 0; j < 2 * res; ++j) {
        double phi = step * j;
        double st = std::sin(theta);
        g.dirs.insert(g.dirs.end(),
                      {std::cos(psi), std::sin(psi) * std::cos(theta),
                       std::sin(psi) * st * std::cos(phi), std::sin(psi) * st * std::sin(phi)});
        g.weights.push_back(wa * wb * step);
      }
    }
  }
  return g;
}

double radical_inverse(unsigned base, unsigned long long index) {
  double inv_base = 1.0 / base;
  double scale = inv_base;
  double r = 0.0;
  while (index > 0) {
    r += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv_base;
  }
  return r;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};

/// Equal-weight low-discrepancy directions on the unit sphere of R^{m+1}.
/// Polar cosines come from symmetric inverse-beta transforms, matching the
/// sin^k angle densities of the surface measure.
UnitSphereGrid halton_sphere_grid(int m, std::size_t count, unsigned seed, double total) {
  UnitSphereGrid g;
  g.dirs.reserve(count * (m + 1));
  g.weights.assign(count, total / static_cast<double>(count));
  for (std::size_t i = 0; i < count; ++i) {
    unsigned long long idx = seed + 1 + i;
    std::vector<double> dir(m + 1, 1.0);
    double sin_prod = 1.0;
    for (int a = 0; a < m - 1; ++a) {
      double u = radical_inverse(kPrimes[a], idx);
      // angle a+1 has density sin^k with k = m-1-a; its cosine follows a
      // symmetric Beta with both parameters (k+1)/2
      double half = (m - a) / 2.0;
      double c = 2.0 * boost::math::ibeta_inv(half, half, u) - 1.0;
      double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      dir[a] = sin_prod * c;
      sin_prod *= s;
    }
    double phi = 2.0 * M_PI * radical_inverse(kPrimes[m - 1], idx);
    dir[m - 1] = sin_prod * std::cos(phi);
    dir[m] = sin_prod * std::sin(phi);
    // flush rounding drift so |dir| = 1 holds to full precision
    double norm = 0.0;
    for (double c : dir) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : dir) c /= norm;
    g.dirs.insert(g.dirs.end(), dir.begin(), dir.end());
  }
  return g;
}

}  // namespace

QuadratureRule build_quadrature(RuleKind kind, const std::vector<double>& center, double radius,
                                int m, int resolution, unsigned seed) {
  if (m < 1) throw std::invalid_argument("build_quadrature: m must be >= 1");
  if (radius <= 0.0) throw std::invalid_argument("build_quadrature: radius must be positive");
  if (resolution < 4) throw std::invalid_argument("build_quadrature: resolution must be >= 4");
  if (static_cast<int>(center.size()) != m + 1)
    throw std::invalid_argument("build_quadrature: center has wrong dimension");

  QuadratureRule rule;
  rule.kind = kind;
  rule.m = m;
  rule.center = center;
  rule.radius = radius;
  rule.resolution = resolution;
  rule.seed = seed;

  const double sigma = surface_area_sigma(m).value;
  const std::size_t halton_count = 2ull * resolution * resolution * resolution;

  if (kind == RuleKind::sphere_surface) {
    UnitSphereGrid g = m <= 3 ? unit_sphere_grid(m, resolution)
                              : halton_sphere_grid(m, halton_count, seed, sigma);
    const double rm = std::pow(radius, m);
    std::size_t n = g.weights.size();
    rule.nodes.resize(n * (m + 1));
    rule.normals.resize(n * (m + 1));
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int c = 0; c <= m; ++c) {
        double d = g.dirs[i * (m + 1) + c];
        rule.normals[i * (m + 1) + c] = d;
        rule.nodes[i * (m + 1) + c] = center[c] + radius * d;
      }
      rule.weights[i] = g.weights[i] * rm;
    }
    return rule;
  }

  if (m <= 3) {
    UnitSphereGrid g = unit_sphere_grid(m, resolution);
    GaussLegendre radial = gauss_legendre(resolution);
    std::size_t per_shell = g.weights.size();
    rule.nodes.reserve(resolution * per_shell * (m + 1));
    rule.weights.reserve(resolution * per_shell);
    for (int a = 0; a < resolution; ++a) {
      double rho = radius * (radial.nodes[a] + 1.0) / 2.0;
      double wr = (radius / 2.0) * radial.weights[a] * std::pow(rho, m);
      for (std::size_t i = 0; i < per_shell; ++i) {
        for (int c = 0; c <= m; ++c)
          rule.nodes.push_back(center[c] + rho * g.dirs[i * (m + 1) + c]);
        rule.weights.push_back(wr * g.weights[i]);
      }
    }
    return rule;
  }

  // m > 3: quasi-random ball sampling; one extra Halton coordinate drives the
  // radius through the volume-uniform transform rho = r u^{1/(m+1)}
  UnitSphereGrid g = halton_sphere_grid(m, halton_count, seed, sigma);
  const double volume = sigma * std::pow(radius, m + 1) / (m + 1);
  rule.weights.assign(halton_count, volume / static_cast<double>(halton_count));
  rule.nodes.resize(halton_count * (m + 1));
  for (std::size_t i = 0; i < halton_count; ++i) {
    double u = radical_inverse(kPrimes[m], seed + 1 + i);
    double rho = radius * std::pow(u, 1.0 / (m + 1));
    for (int c = 0; c <= m; ++c)
      rule.nodes[i * (m + 1) + c] = center[c] + rho * g.dirs[i * (m + 1) + c];
  }
  return rule;
}

namespace detail {

BlockAccumulator::BlockAccumulator(int dim) : dim_(dim), current_(dim, 0.0), blocks_(dim) {}

void BlockAccumulator::add(const ElementD& v, double w) {
  for (int c = 0; c < dim_; ++c) current_[c] += w * v.a[c];
  if (++in_block_ == 1024) {
    for (int c = 0; c < dim_; ++c) {
      blocks_[c].push_back(current_[c]);
      current_[c] = 0.0;
    }
    in_block_ = 0;
  }
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

ElementD BlockAccumulator::finish(const AlgebraSpec& spec) {
  ElementD out(spec);
  for (int c = 0; c < dim_; ++c) {
    double tail = in_block_ > 0 ? current_[c] : 0.0;
    out.a[c] = pairwise_sum(blocks_[c].data(), blocks_[c].size()) + tail;
  }
  return out;
}

}  // namespace detail

ElementD integrate(const QuadratureRule& rule, const SampledFunction& f) {
  if (rule.size() == 0) throw std::invalid_argument("integrate: empty rule");
  ElementD first = f(rule.node(0));
  const AlgebraSpec& spec = *first.spec;
  detail::BlockAccumulator acc(spec.dim_total);
  acc.add(first, rule.weights[0]);
  for (std::size_t i = 1; i < rule.size(); ++i) acc.add(f(rule.node(i)), rule.weights[i]);
  return acc.finish(spec);
}

ElementD integrate(const QuadratureRule& rule,
                   const std::function<ElementD(const double*, const double*)>& f) {
  if (rule.kind != RuleKind::sphere_surface)
    throw std::invalid_argument("integrate: normals are only defined for surface rules");
  if (rule.size() == 0) throw std::invalid_argument("integrate: empty rule");
  ElementD first = f(rule.node(0), rule.normal(0));
  const AlgebraSpec& spec = *first.spec;
  detail::BlockAccumulator acc(spec.dim_total);
  acc.add(first, rule.weights[0]);
  for (std::size_t i = 1; i < rule.size(); ++i)
    acc.add(f(rule.node(i), rule.normal(i)), rule.weights[i]);
  return acc.finish(spec);
}

}  // namespace altmono
