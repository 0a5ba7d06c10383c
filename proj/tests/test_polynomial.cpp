#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "altmono/polynomial.hpp"

using namespace altmono;

namespace {

ElementQ unit(const AlgebraSpec& spec) { return basis<Rational>(spec, 0); }

ElementQ random_coeff(const AlgebraSpec& spec, std::mt19937& rng, bool in_M = false) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  ElementQ x(spec);
  int top = in_M ? spec.dim_hyper : spec.dim_total;
  for (int i = 0; i < top; ++i) x.a[i] = Rational(num(rng), den(rng));
  return x;
}

Polynomial random_polynomial(const AlgebraSpec& spec, std::mt19937& rng, int deg, bool m_valued) {
  Polynomial p = zero_polynomial(spec);
  for (const auto& e : multi_indices_up_to(spec.dim_hyper, deg))
    p.add_term(e, random_coeff(spec, rng, m_valued));
  return p;
}

// Taylor shift: p(x + t) assembled from exact partials; an independent
// route used to probe translation invariance.
Polynomial translate(const Polynomial& p, const std::vector<Rational>& t) {
  Polynomial acc(*p.spec, p.nvars);
  for (const auto& k : multi_indices_up_to(p.nvars, std::max(p.degree(), 0))) {
    Polynomial dk = partial_derivative(p, k);
    if (dk.is_zero()) continue;
    Rational coef(1);
    for (size_t i = 0; i < k.size(); ++i) {
      for (int j = 0; j < k[i]; ++j) coef *= t[i];
      coef /= Rational(factorial(k[i]));
    }
    acc = acc + coef * dk;
  }
  return acc;
}

}  // namespace

TEST_CASE("fueter variables") {
  AlgebraSpec h = build_algebra(AlgebraKind::quaternion);
  Polynomial z1 = fueter_variable(h, 1);

  Polynomial want = zero_polynomial(h);
  want.add_term({0, 1, 0, 0}, unit(h));
  want.add_term({1, 0, 0, 0}, -basis<Rational>(h, 1));
  CHECK(z1 == want);

  CHECK(apply_operator(PolyOperator::dbar_left, z1).is_zero());
  CHECK(apply_operator(PolyOperator::dbar_right, z1).is_zero());

  CHECK(evaluate(z1, {Rational(0), Rational(1), Rational(0), Rational(0)}) == unit(h));
  ElementQ at = evaluate(z1, {Rational(1), Rational(2), Rational(0), Rational(0)});
  ElementQ expect(h);
  expect.a[0] = 2;
  expect.a[1] = -1;
  CHECK(at == expect);  // 2 - i

  CHECK_THROWS_AS(fueter_variable(h, 0), std::invalid_argument);
  CHECK_THROWS_AS(fueter_variable(h, 4), std::invalid_argument);
}

TEST_CASE("symmetrized degree-two polynomials against hand expansions") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion, 3);

  // P_(1,1,0) = (z1 z2 + z2 z1)/2 = x1 x2 - x0 x1 v2 - x0 x2 v1
  Polynomial p11 = fueter_polynomial(oct, {1, 1, 0});
  Polynomial want = zero_polynomial(oct);
  want.add_term({0, 1, 1, 0}, unit(oct));
  want.add_term({1, 1, 0, 0}, -basis<Rational>(oct, 2));
  want.add_term({1, 0, 1, 0}, -basis<Rational>(oct, 1));
  CHECK(p11 == want);

  // P_(2,0,0) = z1^2 / 2 = (x1^2 - 2 x0 x1 v1 - x0^2)/2
  Polynomial p20 = fueter_polynomial(oct, {2, 0, 0});
  Polynomial want2 = zero_polynomial(oct);
  want2.add_term({0, 2, 0, 0}, Rational(1, 2) * unit(oct));
  want2.add_term({1, 1, 0, 0}, -basis<Rational>(oct, 1));
  want2.add_term({2, 0, 0, 0}, Rational(-1, 2) * unit(oct));
  CHECK(p20 == want2);

  Polynomial z1 = fueter_variable(oct, 1);
  CHECK(Rational(2) * p20 == z1 * z1);

  CHECK(fueter_polynomial(oct, {0, 0, 0}) == constant_polynomial(unit(oct)));

  CHECK(evaluate(p11, {Rational(0), Rational(1), Rational(0), Rational(0)}).is_zero());
}

TEST_CASE("ck extension examples") {
  AlgebraSpec h = build_algebra(AlgebraKind::quaternion);
  Polynomial x1 = coordinate(h, 1);

  CHECK(ck_extension(h, x1) == fueter_variable(h, 1));
  CHECK(ck_extension(h, constant_polynomial(unit(h))) == constant_polynomial(unit(h)));

  // CK[x1^2] = x1^2 - 2 x0 x1 v1 - x0^2
  Polynomial sq = x1 * x1;
  Polynomial ck = ck_extension(h, sq);
  Polynomial want = zero_polynomial(h);
  want.add_term({0, 2, 0, 0}, unit(h));
  want.add_term({1, 1, 0, 0}, Rational(-2) * basis<Rational>(h, 1));
  want.add_term({2, 0, 0, 0}, -unit(h));
  CHECK(ck == want);
  CHECK(evaluate(ck, {Rational(1), Rational(0), Rational(0), Rational(0)}) == -unit(h));

  // CK[x1 x2 x3] = x1 x2 x3 - x0 (v1 x2 x3 + v2 x1 x3 + v3 x1 x2)
  Polynomial cube = (coordinate(h, 1) * coordinate(h, 2)) * coordinate(h, 3);
  Polynomial ck3 = ck_extension(h, cube);
  Polynomial want3 = zero_polynomial(h);
  want3.add_term({0, 1, 1, 1}, unit(h));
  want3.add_term({1, 0, 1, 1}, -basis<Rational>(h, 1));
  want3.add_term({1, 1, 0, 1}, -basis<Rational>(h, 2));
  want3.add_term({1, 1, 1, 0}, -basis<Rational>(h, 3));
  CHECK(ck3 == want3);

  CHECK_THROWS_AS(ck_extension(h, coordinate(h, 0)), std::invalid_argument);
}

TEST_CASE("ck extension reproduces scaled fueter polynomials") {
  for (auto spec : {build_algebra(AlgebraKind::quaternion), build_algebra(AlgebraKind::clifford, 2),
                    build_algebra(AlgebraKind::octonion, 3)}) {
    for (const auto& k : multi_indices_up_to(spec.m(), 3)) {
      Polynomial monomial = constant_polynomial(unit(spec));
      for (size_t i = 0; i < k.size(); ++i)
        for (int j = 0; j < k[i]; ++j) monomial = monomial * coordinate(spec, 1 + i);
      Polynomial ck = ck_extension(spec, monomial);
      Polynomial scaled = Rational(multi_factorial(k)) * fueter_polynomial(spec, k);
      INFO(spec.name);
      CHECK(ck == scaled);
      // restriction to x_0 = 0 returns the data
      Polynomial restricted(spec, spec.dim_hyper);
      for (const auto& [e, c] : ck.terms)
        if (e[0] == 0) restricted.add_term(e, c);
      CHECK(restricted == monomial);
    }
  }
}

TEST_CASE("monogenicity of fueter polynomials, both sides") {
  for (auto spec : {build_algebra(AlgebraKind::quaternion), build_algebra(AlgebraKind::clifford, 3),
                    build_algebra(AlgebraKind::dual_quaternion)}) {
    for (const auto& k : multi_indices_up_to(spec.m(), 3)) {
      Polynomial pk = fueter_polynomial(spec, k);
      INFO(spec.name);
      CHECK(apply_operator(PolyOperator::dbar_left, pk).is_zero());
      CHECK(apply_operator(PolyOperator::dbar_right, pk).is_zero());
      // coefficients stay inside the hypercomplex subspace
      for (const auto& [e, c] : pk.terms) CHECK(in_hyper_subspace(c));
    }
  }
}

TEST_CASE("association order does not matter") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion);
  for (const auto& k : multi_indices_up_to(oct.m(), 3)) {
    CHECK(fueter_polynomial(oct, k, Assoc::right_to_left) ==
          fueter_polynomial(oct, k, Assoc::left_to_right));
  }
  // two extra bracketing trees at |k| = 3, with and without a right factor:
  // ((z_a z_b) z_c) vs (z_a (z_b z_c)) summed over distinct words, and the
  // same with each word right-multiplied by a fixed element.
  std::mt19937 rng(5);
  ElementQ a = random_coeff(oct, rng);
  std::vector<Polynomial> z = {zero_polynomial(oct)};
  for (int l = 1; l <= oct.m(); ++l) z.push_back(fueter_variable(oct, l));
  std::vector<int> word = {1, 2, 4};
  Polynomial t1 = zero_polynomial(oct), t2 = zero_polynomial(oct);
  Polynomial t1a = zero_polynomial(oct), t2a = zero_polynomial(oct);
  do {
    Polynomial left = (z[word[0]] * z[word[1]]) * z[word[2]];
    Polynomial right = z[word[0]] * (z[word[1]] * z[word[2]]);
    t1 = t1 + left;
    t2 = t2 + right;
    // trees acting on an appended constant factor a
    t1a = t1a + (z[word[0]] * z[word[1]]) * right_multiply(z[word[2]], a);
    t2a = t2a + z[word[0]] * right_multiply(z[word[1]] * z[word[2]], a);
  } while (std::next_permutation(word.begin(), word.end()));
  CHECK(t1 == t2);
  CHECK(t1a == t2a);
}

TEST_CASE("operator identities") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion);
  CHECK(apply_operator(PolyOperator::dbar_left, coordinate(oct, 0)) ==
        constant_polynomial(unit(oct)));

  std::mt19937 rng(37);
  for (int it = 0; it < 10; ++it) {
    Polynomial p = random_polynomial(oct, rng, 3, false);
    Polynomial lhs = apply_operator(PolyOperator::dconj_left,
                                    apply_operator(PolyOperator::dbar_left, p));
    CHECK(lhs == apply_operator(PolyOperator::laplacian, p));
    Polynomial rhs = apply_operator(PolyOperator::dbar_right,
                                    apply_operator(PolyOperator::dconj_right, p));
    CHECK(rhs == apply_operator(PolyOperator::laplacian, p));
  }
}

TEST_CASE("partial derivatives") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion, 3);
  Polynomial p11 = fueter_polynomial(oct, {1, 1, 0});
  CHECK(partial_derivative(p11, {0, 1, 1, 0}) == constant_polynomial(unit(oct)));
  CHECK(partial_derivative(fueter_variable(oct, 1), {1, 0, 0, 0}) ==
        constant_polynomial(-basis<Rational>(oct, 1)));
  CHECK(partial_derivative(p11, {0, 3, 0, 0}).is_zero());
  CHECK_THROWS_AS(partial_derivative(p11, {0, 1}), std::invalid_argument);
}

TEST_CASE("derivatives commute with the cr operator and translation preserves kernels") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion, 3);
  std::mt19937 rng(41);
  for (int it = 0; it < 8; ++it) {
    Polynomial p = random_polynomial(oct, rng, 3, false);
    for (int s = 0; s < oct.dim_hyper; ++s) {
      CHECK(apply_operator(PolyOperator::dbar_left, partial(p, s)) ==
            partial(apply_operator(PolyOperator::dbar_left, p), s));
    }
  }
  Polynomial pk = fueter_polynomial(oct, {1, 1, 1});
  std::vector<Rational> t = {Rational(1, 3), Rational(-2), Rational(1, 2), Rational(5, 7)};
  Polynomial shifted = translate(pk, t);
  CHECK(evaluate(shifted, {Rational(0), Rational(0), Rational(0), Rational(0)}) ==
        evaluate(pk, t));
  CHECK(apply_operator(PolyOperator::dbar_left, shifted).is_zero());
}

TEST_CASE("right multiples of fueter polynomials stay monogenic") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion);
  std::mt19937 rng(43);
  for (const auto& k : multi_indices_up_to(oct.m(), 2)) {
    ElementQ a = random_coeff(oct, rng);
    Polynomial pka = right_multiply(fueter_polynomial(oct, k), a);
    CHECK(apply_operator(PolyOperator::dbar_left, pka).is_zero());
  }
  for (auto spec : {build_algebra(AlgebraKind::quaternion), build_algebra(AlgebraKind::clifford, 3),
                    build_algebra(AlgebraKind::dual_quaternion)}) {
    std::mt19937 rng2(47);
    for (const auto& k : multi_indices_up_to(spec.m(), 2)) {
      ElementQ a = random_coeff(spec, rng2);
      Polynomial pka = right_multiply(fueter_polynomial(spec, k), a);
      INFO(spec.name);
      CHECK(apply_operator(PolyOperator::dbar_left, pka).is_zero());
    }
  }
}

TEST_CASE("homogeneous monogenic polynomials are reproduced from their derivatives") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion, 3);
  std::mt19937 rng(53);
  for (int deg = 1; deg <= 3; ++deg) {
    for (int it = 0; it < 3; ++it) {
      Polynomial P = zero_polynomial(oct);
      for (const auto& k : multi_indices_of_degree(oct.m(), deg))
        P = P + right_multiply(fueter_polynomial(oct, k), random_coeff(oct, rng));
      CHECK(apply_operator(PolyOperator::dbar_left, P).is_zero());

      Polynomial rebuilt = zero_polynomial(oct);
      std::vector<Rational> origin(oct.dim_hyper, Rational(0));
      for (const auto& k : multi_indices_of_degree(oct.m(), deg)) {
        std::vector<int> full(oct.dim_hyper, 0);
        for (size_t i = 0; i < k.size(); ++i) full[1 + i] = k[i];
        ElementQ dk0 = evaluate(partial_derivative(P, full), origin);
        rebuilt = rebuilt + right_multiply(fueter_polynomial(oct, k), dk0);
      }
      CHECK(rebuilt == P);
    }
  }
}

TEST_CASE("evaluation stays exact on the rational track") {
  AlgebraSpec oct = build_algebra(AlgebraKind::octonion, 3);
  Polynomial p11 = fueter_polynomial(oct, {1, 1, 0});
  ElementQ v = evaluate(p11, {Rational(0), Rational(3, 10), Rational(1, 10), Rational(0)});
  CHECK(v == scalar_element(oct, Rational(3, 100)));

  // compiled double-track evaluation agrees with the exact one
  CompiledPolynomial cp = compile(p11);
  std::vector<double> xd = {0.5, 0.25, -0.75, 0.125};
  ElementD got = cp.eval(xd.data());
  ElementQ exact =
      evaluate(p11, {Rational(1, 2), Rational(1, 4), Rational(-3, 4), Rational(1, 8)});
  for (int i = 0; i < oct.dim_total; ++i)
    CHECK(got.a[i] == doctest::Approx(to_double(exact.a[i])).epsilon(1e-14));
}

TEST_CASE("multi index enumeration") {
  auto deg2 = multi_indices_of_degree(3, 2);
  CHECK(deg2.size() == 6);
  for (const auto& k : deg2) {
    int total = 0;
    for (int v : k) total += v;
    CHECK(total == 2);
  }
  auto upto = multi_indices_up_to(2, 3);
  CHECK(upto.size() == 10);
  CHECK(upto.front() == std::vector<int>{0, 0});
  GrlexLess less;
  for (size_t i = 1; i < upto.size(); ++i) CHECK(less(upto[i - 1], upto[i]));
}
