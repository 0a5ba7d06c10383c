#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "altmono/serialize.hpp"

using namespace altmono;

TEST_CASE("algebra specs round-trip bit-exactly") {
  for (AlgebraKind kind : {AlgebraKind::complex_field, AlgebraKind::quaternion,
                           AlgebraKind::octonion, AlgebraKind::clifford,
                           AlgebraKind::dual_quaternion}) {
    AlgebraSpec spec = kind == AlgebraKind::clifford ? build_algebra(kind, 3) : build_algebra(kind);
    Json j = spec_to_json(spec);
    AlgebraSpec back = spec_from_json(j);

    CHECK(back.name == spec.name);
    CHECK(back.dim_total == spec.dim_total);
    CHECK(back.dim_hyper == spec.dim_hyper);
    CHECK(back.structure == spec.structure);
    CHECK(back.involution_sign == spec.involution_sign);
    CHECK(spec_to_json(back).dump() == j.dump());  // stable text too
  }
}

TEST_CASE("loading rejects tensors that break the axioms") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion);
  Json j = spec_to_json(oct);
  // perturb one structure entry: c[1][2][3] += 1/2
  const std::size_t flat = (1u * oct.dim_total + 2) * oct.dim_total + 3;
  Rational bumped = parse_rational(j["structure"][flat].get<std::string>()) + Rational(1, 2);
  j["structure"][flat] = format_rational(bumped);
  CHECK_THROWS_WITH_AS(spec_from_json(j), doctest::Contains("rejected"), std::runtime_error);

  Json short_tensor = spec_to_json(oct);
  short_tensor["structure"].erase(0);
  CHECK_THROWS_AS(spec_from_json(short_tensor), std::runtime_error);

  Json bad_dims = spec_to_json(oct);
  bad_dims["dim_hyper"] = 99;
  CHECK_THROWS_AS(spec_from_json(bad_dims), std::runtime_error);
}

TEST_CASE("spec files load from disk and malformed text raises a parse error") {
  AlgebraSpec quat = build_algebra(AlgebraKind::quaternion);
  const std::string good = "/tmp/altmono_spec_good.json";
  const std::string bad = "/tmp/altmono_spec_bad.json";
  {
    std::ofstream out(good);
    out << spec_to_json(quat).dump(2);
  }
  {
    std::ofstream out(bad);
    out << "{ \"name\": \"broken\", ";
  }
  AlgebraSpec loaded = load_spec_file(good);
  CHECK(loaded.structure == quat.structure);
  CHECK_THROWS_AS(load_spec_file(bad), Json::parse_error);
  CHECK_THROWS_AS(load_spec_file("/tmp/altmono_no_such_file.json"), std::runtime_error);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("polynomials round-trip with canonical term order") {
  AlgebraSpec spec = build_algebra(AlgebraKind::octonion, 3);
  Polynomial p = fueter_polynomial(spec, {2, 1, 0});  // fractional coefficients
  p = p + right_multiply(fueter_variable(spec, 2), basis<Rational>(spec, 5));

  Json j = polynomial_to_json(p);
  Polynomial back = polynomial_from_json(spec, j);
  CHECK(back == p);

  // terms appear in graded lexicographic order
  GrlexLess less;
  std::vector<std::vector<int>> seen;
  for (const Json& t : j["terms"]) seen.push_back(t["exponents"].get<std::vector<int>>());
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(less(seen[i - 1], seen[i]));

  CHECK_THROWS_AS(polynomial_from_json(build_algebra(AlgebraKind::quaternion), j),
                  std::invalid_argument);
}

TEST_CASE("radial-rational functions round-trip exactly") {
  AlgebraSpec spec = build_algebra(AlgebraKind::clifford, 2);
  RadialRationalFunction q = differentiate_kernel(cauchy_kernel(spec), {0, 1, 1});

  Json j = radial_to_json(q);
  RadialRationalFunction back = radial_from_json(spec, j);
  CHECK(equal(back, q));
  CHECK(back.prefactor == q.prefactor);
  CHECK(back.numerators.size() == q.numerators.size());

  // every term carries the radial power of its level
  for (const Json& t : j["terms"]) {
    int rp = t["radial_power"].get<int>();
    CHECK((rp - 3) % 2 == 0);
    CHECK(rp >= 3);
  }

  Json corrupt = j;
  corrupt["terms"][0]["radial_power"] = 4;  // wrong parity for m = 2
  CHECK_THROWS_AS(radial_from_json(spec, corrupt), std::invalid_argument);
}

TEST_CASE("quadrature rules rebuild from recorded parameters") {
  QuadratureRule surf = build_quadrature(RuleKind::sphere_surface, {0.2, -0.1, 0.4}, 1.5, 2, 8);
  QuadratureRule surf2 = rule_from_json(rule_to_json(surf));
  CHECK(surf2.nodes == surf.nodes);
  CHECK(surf2.weights == surf.weights);
  CHECK(surf2.normals == surf.normals);

  QuadratureRule ball =
      build_quadrature(RuleKind::ball_volume, {0, 0, 0, 0, 0}, 0.8, 4, 6, 7u);
  Json j = rule_to_json(ball);
  CHECK(j["seed"] == 7u);
  QuadratureRule ball2 = rule_from_json(j);
  CHECK(ball2.nodes == ball.nodes);
  CHECK(ball2.weights == ball.weights);

  Json unknown = j;
  unknown["kind"] = "simplex";
  CHECK_THROWS_AS(rule_from_json(unknown), std::invalid_argument);
}
