#pragma once

#include <string>

#include <json.hpp>

#include "altmono/kernel.hpp"
#include "altmono/quadrature.hpp"

namespace altmono {

using Json = nlohmann::json;

/// {name, dim_total, dim_hyper, structure, involution_sign} with the structure
/// tensor flattened row-major over [s][t][u] and every rational written as a
/// canonical "p/q" string, so the round trip is bit-exact.
Json spec_to_json(const AlgebraSpec& spec);

/// Rebuilds a spec and runs the axiom validator on it. Throws
/// std::runtime_error listing all violations when the loaded tensor is not an
/// alternative *-algebra with a usable hypercomplex frame.
AlgebraSpec spec_from_json(const Json& j);

AlgebraSpec load_spec_file(const std::string& path);

/// List of {exponents, coeff} in graded lexicographic order; coeff is the
/// dim_total-long rational coordinate vector of the algebra coefficient.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const AlgebraSpec& spec, const Json& j);

/// Same term layout as polynomial_to_json plus a radial_power per term (the
/// exponent of 1/|x| multiplying that term) and the shared pi-scaled prefactor.
Json radial_to_json(const RadialRationalFunction& f);
RadialRationalFunction radial_from_json(const AlgebraSpec& spec, const Json& j);

/// Defining parameters only: nodes and weights are deterministic functions of
/// {kind, center, radius, m, resolution, seed}, so the round trip rebuilds
/// them through build_quadrature and cross-checks the recorded node count.
Json rule_to_json(const QuadratureRule& rule);
QuadratureRule rule_from_json(const Json& j);

}  // namespace altmono
