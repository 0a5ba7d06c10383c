#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace altmono {

using BigInt = boost::multiprecision::cpp_int;
// Expression templates are disabled so arithmetic yields plain values; this
// keeps template deduction sane in the polynomial and kernel layers.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline double to_double(const Rational& q) { return static_cast<double>(q); }

/// Canonical "p/q" form with q > 0; "p" alone means denominator 1.
std::string format_rational(const Rational& q);

/// Accepts "p", "p/q", optional leading '-'. Throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);

/// A rational multiple of an integer power of pi. Sums are only defined for
/// matching powers; products always are.
struct PiScaled {
  Rational coef{0};
  int pi_power{0};

  double value() const {
    if (coef == 0) return 0.0;
    return to_double(coef) * std::pow(M_PI, pi_power);
  }

  PiScaled operator*(const PiScaled& o) const { return {coef * o.coef, pi_power + o.pi_power}; }
  PiScaled operator*(const Rational& r) const { return {coef * r, pi_power}; }
  PiScaled operator-() const { return {-coef, pi_power}; }

  PiScaled operator+(const PiScaled& o) const {
    if (coef == 0) return o;
    if (o.coef == 0) return *this;
    if (pi_power != o.pi_power)
      throw std::invalid_argument("PiScaled sum with mismatched pi powers");
    return {coef + o.coef, pi_power};
  }

  PiScaled inverse() const {
    if (coef == 0) throw std::domain_error("PiScaled inverse of zero");
    return {Rational(denominator(coef), numerator(coef)), -pi_power};
  }

  bool operator==(const PiScaled& o) const {
    if (coef == 0 && o.coef == 0) return true;
    return coef == o.coef && pi_power == o.pi_power;
  }
};

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace altmono
