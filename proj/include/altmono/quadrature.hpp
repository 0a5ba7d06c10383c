#pragma once

#include <cstddef>
#include <functional>

#include "altmono/algebra.hpp"

namespace altmono {

enum class RuleKind { sphere_surface, ball_volume };

/// Nodes, weights and (for surface rules) exterior unit normals over a ball
/// or its bounding sphere inside the frame subspace, stored flat with stride
/// m+1. For m <= 3 the rule is a tensor-product Gauss-Legendre grid in
/// hyperspherical angles with a trapezoid rule in the periodic angle; for
/// m > 3 it is a Halton sequence with equal weights.
struct QuadratureRule {
  RuleKind kind = RuleKind::sphere_surface;
  int m = 0;
  std::vector<double> center;
  double radius = 0.0;
  int resolution = 0;
  unsigned seed = 0;  ///< Halton skip count; recorded for every rule

  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> normals;  ///< surface rules only

  std::size_t size() const { return weights.size(); }
  const double* node(std::size_t i) const { return nodes.data() + i * (m + 1); }
  const double* normal(std::size_t i) const { return normals.data() + i * (m + 1); }
};

QuadratureRule build_quadrature(RuleKind kind, const std::vector<double>& center, double radius,
                                int m, int resolution, unsigned seed = 42);

/// Nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

using SampledFunction = std::function<ElementD(const double*)>;

namespace detail {

/// Deterministic fixed-shape reduction: plain sums inside 1024-entry blocks,
/// pairwise recursion over the block sums. The shape depends only on the
/// number of added values, never on threading or chunked evaluation order.
class BlockAccumulator {
 public:
  explicit BlockAccumulator(int dim);
  void add(const ElementD& v, double w);
  ElementD finish(const AlgebraSpec& spec);

 private:
  int dim_;
  int in_block_ = 0;
  std::vector<double> current_;
  std::vector<std::vector<double>> blocks_;
};

double pairwise_sum(const double* v, std::size_t n);

}  // namespace detail

/// Componentwise weighted sum over all nodes.
ElementD integrate(const QuadratureRule& rule, const SampledFunction& f);

/// Surface-only variant handing the evaluator the exterior unit normal too.
ElementD integrate(const QuadratureRule& rule,
                   const std::function<ElementD(const double* node, const double* normal)>& f);

}  // namespace altmono
