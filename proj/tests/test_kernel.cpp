#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>

#include "altmono/kernel.hpp"

using namespace altmono;

namespace {

// Float oracle for the sphere surface constant, straight from the Gamma
// quotient with no parity case split.
double sigma_oracle(int m) {
  double g_half = boost::math::tgamma(0.5);
  return 2.0 * std::pow(g_half, m + 1) / boost::math::tgamma((m + 1) / 2.0);
}

// Independent zero test: clear all denominators by multiplying every level
// back up to a single polynomial. No division is involved, so this cannot
// share a bug with canonicalize().
Polynomial multiplied_out(const RadialRationalFunction& f) {
  const AlgebraSpec& spec = *f.spec;
  Polynomial radius_sq(spec, f.m + 1);
  for (int s = 0; s <= f.m; ++s) {
    std::vector<int> e(f.m + 1, 0);
    e[s] = 2;
    radius_sq.add_term(e, scalar_element<Rational>(spec, Rational(1)));
  }
  int top = f.numerators.empty() ? 0 : f.numerators.rbegin()->first;
  Polynomial acc(spec, f.m + 1);
  for (const auto& [j, p] : f.numerators) {
    Polynomial shell = p;
    for (int i = 0; i < top - j; ++i) shell = shell * radius_sq;
    acc = acc + shell;
  }
  return acc;
}

ElementQ rational_element(const AlgebraSpec& spec, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  ElementQ x(spec);
  for (int i = 0; i < spec.dim_total; ++i) x.a[i] = Rational(num(rng), den(rng));
  return x;
}

std::vector<Rational> rational_point(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    std::vector<Rational> x(n);
    bool nonzero = false;
    for (auto& c : x) {
      c = Rational(num(rng), den(rng));
      if (c != 0) nonzero = true;
    }
    if (nonzero) return x;
  }
}

}  // namespace

TEST_CASE("surface constant: parity closed forms against the Gamma oracle") {
  for (int m = 1; m <= 8; ++m) {
    SurfaceConstant sc = surface_area_sigma(m);
    CHECK(sc.m == m);
    CHECK(sc.value == doctest::Approx(sigma_oracle(m)).epsilon(1e-13));
  }
  SurfaceConstant s1 = surface_area_sigma(1);
  CHECK(s1.coef == Rational(2));
  CHECK(s1.pi_power == 1);
  SurfaceConstant s2 = surface_area_sigma(2);
  CHECK(s2.coef == Rational(4));
  CHECK(s2.pi_power == 1);
  SurfaceConstant s3 = surface_area_sigma(3);
  CHECK(s3.coef == Rational(2));
  CHECK(s3.pi_power == 2);
  SurfaceConstant s4 = surface_area_sigma(4);
  CHECK(s4.coef == Rational(8, 3));
  CHECK(s4.pi_power == 2);
  CHECK(s2.value == doctest::Approx(12.566370614).epsilon(1e-9));
  CHECK_THROWS_AS(surface_area_sigma(0), std::invalid_argument);
}

TEST_CASE("cauchy kernel: structure and closed-form point values") {
  AlgebraSpec spec = build_algebra(AlgebraKind::clifford, 2);
  RadialRationalFunction e = cauchy_kernel(spec);
  REQUIRE(e.m == 2);
  REQUIRE(e.numerators.size() == 1);
  REQUIRE(e.numerators.count(0) == 1);

  Polynomial expected(spec, 3);
  expected.add_term({1, 0, 0}, basis<Rational>(spec, 0));
  expected.add_term({0, 1, 0}, -basis<Rational>(spec, 1));
  expected.add_term({0, 0, 1}, -basis<Rational>(spec, 2));
  CHECK(e.numerators.at(0) == expected);
  CHECK(e.prefactor.coef == Rational(1, 4));
  CHECK(e.prefactor.pi_power == -1);

  ElementD at_v1 = evaluate_radial(e, {0.0, 1.0, 0.0});
  CHECK(at_v1.a[0] == doctest::Approx(0.0));
  CHECK(at_v1.a[1] == doctest::Approx(-1.0 / (4.0 * M_PI)).epsilon(1e-14));
  CHECK(at_v1.a[2] == doctest::Approx(0.0));

  ElementD at_two = evaluate_radial(e, {2.0, 0.0, 0.0});
  CHECK(at_two.a[0] == doctest::Approx(1.0 / (16.0 * M_PI)).epsilon(1e-14));
  CHECK(at_two.a[1] == doctest::Approx(0.0));

  ElementD at_one = evaluate_radial(e, {1.0, 0.0, 0.0});
  CHECK(at_one.a[0] == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));

  ExactRadialValue ev = exact_value(e, {Rational(0), Rational(1), Rational(0)});
  CHECK(ev.profile == -basis<Rational>(spec, 1));
  CHECK(ev.level == 0);
  CHECK(ev.radius_sq == Rational(1));

  CHECK_THROWS_AS(evaluate_radial(e, {0.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(exact_value(e, {Rational(0), Rational(0), Rational(0)}), std::domain_error);
}

TEST_CASE("first kernel derivative matches a hand-differentiated oracle") {
  AlgebraSpec spec = build_algebra(AlgebraKind::clifford, 2);
  RadialRationalFunction e = cauchy_kernel(spec);

  // d_1 of x^c / r^3 by hand:
  //   -v_1 / r^3  -  3 x_1 x^c / r^5,
  // so the signed derivative is v_1 / r^3 + 3 x_1 x^c / r^5.
  RadialRationalFunction oracle;
  oracle.spec = &spec;
  oracle.m = 2;
  oracle.prefactor = e.prefactor;
  Polynomial lvl0(spec, 3);
  lvl0.add_term({0, 0, 0}, basis<Rational>(spec, 1));
  Polynomial lvl1(spec, 3);
  lvl1.add_term({1, 1, 0}, Rational(3) * basis<Rational>(spec, 0));
  lvl1.add_term({0, 2, 0}, Rational(-3) * basis<Rational>(spec, 1));
  lvl1.add_term({0, 1, 1}, Rational(-3) * basis<Rational>(spec, 2));
  oracle.numerators[0] = lvl0;
  oracle.numerators[1] = lvl1;

  RadialRationalFunction q1 = differentiate_kernel(e, {0, 1, 0});
  CHECK(equal(q1, oracle));
  CHECK(equal(q1, -radial_partial(e, 1)));

  // difference is zero by the multiply-out route as well
  CHECK(multiplied_out(canonicalize(q1 - oracle)).is_zero());

  // empty index: the signed derivative is the kernel itself
  RadialRationalFunction q0 = differentiate_kernel(e, {0, 0, 0});
  CHECK(equal(q0, e));
  CHECK_THROWS_AS(differentiate_kernel(e, {0, 1}), std::invalid_argument);
}

TEST_CASE("monogenicity of the kernel by the division-free route") {
  // Hand-assembled dbar(E) for m=2, multiplied out with no canonicalize()
  // involvement anywhere: sum_s v_s [ (d_s p0) r^2 - 3 x_s p0 ] must vanish
  // as a plain polynomial.
  AlgebraSpec spec = build_algebra(AlgebraKind::clifford, 2);
  Polynomial p0(spec, 3);
  p0.add_term({1, 0, 0}, basis<Rational>(spec, 0));
  p0.add_term({0, 1, 0}, -basis<Rational>(spec, 1));
  p0.add_term({0, 0, 1}, -basis<Rational>(spec, 2));
  Polynomial radius_sq(spec, 3);
  radius_sq.add_term({2, 0, 0}, scalar_element<Rational>(spec, Rational(1)));
  radius_sq.add_term({0, 2, 0}, scalar_element<Rational>(spec, Rational(1)));
  radius_sq.add_term({0, 0, 2}, scalar_element<Rational>(spec, Rational(1)));

  Polynomial acc(spec, 3);
  for (int s = 0; s <= 2; ++s) {
    std::vector<int> e(3, 0);
    e[s] = 1;
    Polynomial xs(spec, 3);
    xs.add_term(e, scalar_element<Rational>(spec, Rational(1)));
    Polynomial piece = partial(p0, s) * radius_sq - Rational(3) * (xs * p0);
    acc = acc + left_multiply(basis<Rational>(spec, s), piece);
  }
  CHECK(acc.is_zero());
}

TEST_CASE("kernel identities: dbar, laplacian, component symmetry") {
  std::vector<AlgebraSpec> specs;
  specs.push_back(build_algebra(AlgebraKind::complex_field));
  specs.push_back(build_algebra(AlgebraKind::clifford, 2));
  specs.push_back(build_algebra(AlgebraKind::quaternion));
  for (const AlgebraSpec& spec : specs) {
    CAPTURE(spec.name);
    RadialRationalFunction e = cauchy_kernel(spec);
    CHECK(is_zero(dbar_left(e)));
    CHECK(is_zero(dbar_right(e)));
    CHECK(is_zero(laplacian(e)));
    for (int s = 1; s <= e.m; ++s)
      for (int t = s; t <= e.m; ++t)
        CHECK(equal(radial_partial(component(e, s), t), radial_partial(component(e, t), s)));
  }

  // derivatives of a harmonic function stay harmonic
  AlgebraSpec cl2 = build_algebra(AlgebraKind::clifford, 2);
  RadialRationalFunction q = differentiate_kernel(cauchy_kernel(cl2), {0, 1, 1});
  CHECK(is_zero(laplacian(q)));
  CHECK(is_zero(dbar_left(q)));
}

TEST_CASE("right-multiplication stability in the octonions") {
  AlgebraSpec spec = build_algebra(AlgebraKind::octonion);
  RadialRationalFunction e = cauchy_kernel(spec);
  std::mt19937 rng(2027);
  for (int trial = 0; trial < 3; ++trial) {
    ElementQ a = rational_element(spec, rng);
    CHECK(is_zero(dbar_left(right_multiply(e, a))));
  }
}

TEST_CASE("componentwise associator sum vanishes") {
  AlgebraSpec spec = build_algebra(AlgebraKind::octonion, 3);
  RadialRationalFunction e = cauchy_kernel(spec);
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 3; ++trial) {
    ElementQ a = rational_element(spec, rng);

    // symbolic route: sum_s [v_s, dbar(E_s), a] as a radial-rational function
    RadialRationalFunction sum;
    sum.spec = &spec;
    sum.m = e.m;
    sum.prefactor = e.prefactor;
    for (int s = 0; s <= e.m; ++s) {
      ElementQ vs = basis<Rational>(spec, s);
      RadialRationalFunction g = dbar_left(component(e, s));
      RadialRationalFunction assoc =
          right_multiply(left_multiply(vs, g), a) - left_multiply(vs, right_multiply(g, a));
      sum = sum + assoc;
    }
    CHECK(is_zero(sum));

    // point route: align levels by hand and sum exact associators
    std::vector<Rational> x = rational_point(e.m + 1, rng);
    std::vector<ExactRadialValue> vals;
    int top = 0;
    for (int s = 0; s <= e.m; ++s) {
      vals.push_back(exact_value(dbar_left(component(e, s)), x));
      top = std::max(top, vals.back().level);
    }
    ElementQ total(spec);
    for (int s = 0; s <= e.m; ++s) {
      Rational shell(1);
      for (int i = 0; i < top - vals[s].level; ++i) shell *= vals[s].radius_sq;
      total = total + associator(basis<Rational>(spec, s), vals[s].profile * shell, a);
    }
    CHECK(total.is_zero());

    // the same sum is visibly nonzero without the alternating structure:
    // replace v_s by a fixed non-frame unit to break it
    ElementQ e4 = basis<Rational>(spec, 4);
    ElementQ broken(spec);
    bool saw_nonzero = false;
    for (int s = 1; s <= e.m; ++s) {
      Rational shell(1);
      for (int i = 0; i < top - vals[s].level; ++i) shell *= vals[s].radius_sq;
      broken = broken + associator(e4, vals[s].profile * shell, a);
      if (!broken.is_zero()) saw_nonzero = true;
    }
    CHECK(saw_nonzero);
  }
}

TEST_CASE("signed derivatives scale with the expected negative power") {
  AlgebraSpec spec = build_algebra(AlgebraKind::clifford, 2);
  RadialRationalFunction e = cauchy_kernel(spec);
  std::mt19937 rng(99);
  for (const std::vector<int>& k :
       {std::vector<int>{0, 1, 0}, std::vector<int>{0, 2, 1}, std::vector<int>{1, 1, 2}}) {
    RadialRationalFunction q = differentiate_kernel(e, k);
    int total = 0;
    for (int v : k) total += v;

    std::vector<Rational> x = rational_point(3, rng);
    Rational t(7, 4);
    std::vector<Rational> tx = x;
    for (auto& c : tx) c *= t;

    ExactRadialValue vx = exact_value(q, x);
    ExactRadialValue vtx = exact_value(q, tx);
    REQUIRE(vx.level == vtx.level);

    // q(tx) = t^{-(m+|k|)} q(x) translated to the common-denominator profile:
    // profile(tx) = t^{1 + 2 level - |k|} profile(x)
    int exp = 1 + 2 * vx.level - total;
    Rational scale(1);
    for (int i = 0; i < std::abs(exp); ++i) scale *= t;
    if (exp < 0) scale = Rational(1) / scale;
    CHECK(vtx.profile == vx.profile * scale);

    // float cross-check of the homogeneity degree itself
    std::vector<double> xd(3), txd(3);
    for (int i = 0; i < 3; ++i) {
      xd[i] = to_double(x[i]);
      txd[i] = to_double(tx[i]);
    }
    ElementD fx = evaluate_radial(q, xd);
    ElementD ftx = evaluate_radial(q, txd);
    double factor = std::pow(to_double(t), -(2 + total));
    for (int i = 0; i < spec.dim_total; ++i)
      CHECK(ftx.a[i] == doctest::Approx(fx.a[i] * factor).epsilon(1e-11));
  }
}

TEST_CASE("derivative table: recursion agrees with direct differentiation") {
  AlgebraSpec spec = build_algebra(AlgebraKind::clifford, 2);
  RadialRationalFunction e = cauchy_kernel(spec);

  auto table = kernel_table(spec, 3);
  // pure-x indices with |k| <= 3 over two frame variables: 10 of them
  CHECK(table.size() == 10);
  for (const auto& [k, q] : table) {
    CHECK(k[0] == 0);
    CHECK(equal(q, differentiate_kernel(e, k)));
  }

  auto full = kernel_table(spec, 2, true);
  CHECK(full.size() == 10);
  CHECK(full.count({2, 0, 0}) == 1);
  CHECK(equal(full.at({1, 1, 0}), differentiate_kernel(e, {1, 1, 0})));
}

TEST_CASE("arithmetic sanity: cancellation and the multiply-out oracle agree") {
  AlgebraSpec spec = build_algebra(AlgebraKind::quaternion);
  RadialRationalFunction e = cauchy_kernel(spec);
  RadialRationalFunction q = differentiate_kernel(e, {0, 1, 0, 2});

  CHECK(is_zero(q - q));
  CHECK(multiplied_out(canonicalize(q - q)).is_zero());
  CHECK_FALSE(is_zero(q));
  CHECK_FALSE(multiplied_out(canonicalize(q)).is_zero());

  RadialRationalFunction sum = q + (-q);
  CHECK(is_zero(sum));

  // canonicalize() must preserve the value: p/r^3 - p r^2/r^5 telescopes away
  Polynomial radius_sq(spec, 4);
  for (int s = 0; s <= 3; ++s) {
    std::vector<int> ex(4, 0);
    ex[s] = 2;
    radius_sq.add_term(ex, scalar_element<Rational>(spec, Rational(1)));
  }
  Polynomial p(spec, 4);
  p.add_term({1, 0, 1, 0}, basis<Rational>(spec, 2));
  p.add_term({0, 0, 0, 2}, Rational(5) * basis<Rational>(spec, 0));
  RadialRationalFunction raw = e;
  raw.numerators[0] = raw.numerators[0] + p;
  raw.numerators[1] = -Rational(1) * (p * radius_sq);
  CHECK(equal(raw, e));
  std::vector<double> x = {0.3, -0.7, 0.2, 0.4};
  ElementD before = evaluate_radial(raw, x);
  ElementD after = evaluate_radial(canonicalize(raw), x);
  for (int i = 0; i < spec.dim_total; ++i)
    CHECK(before.a[i] == doctest::Approx(after.a[i]).epsilon(1e-12));
}
