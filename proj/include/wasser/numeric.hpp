#ifndef WASSER_NUMERIC_HPP
#define WASSER_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace wasser {

using Rational = boost::multiprecision::mpq_rational;

/// Numeric traits for the two scalar modes.
///
/// Float mode (`double`) carries a tolerance for inequality checks and
/// allows real orders p >= 1. Exact mode (`Rational`) requires integer
/// orders and compares on p-th powers, so every check is exact.
template <class S>
struct num_traits;

template <>
struct num_traits<double> {
  using scalar = double;
  using order = double;
  static constexpr bool exact = false;
  static constexpr double ineq_tol = 1e-9;
  static constexpr double eq_tol = 1e-12;

  static double power(double x, double p) {
    if (p == 1.0) return x;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
  }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double from_int(long n) { return static_cast<double>(n); }
  static void validate_order(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("order p must be >= 1");
  }
};

template <>
struct num_traits<Rational> {
  using scalar = Rational;
  using order = unsigned;
  static constexpr bool exact = true;
  static constexpr double ineq_tol = 0.0;
  static constexpr double eq_tol = 0.0;

  static Rational power(const Rational& x, unsigned p) {
    Rational acc(1);
    Rational base = x;
    unsigned e = p;
    while (e > 0) {
      if (e & 1u) acc *= base;
      base *= base;
      e >>= 1u;
    }
    return acc;
  }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_int(long n) { return Rational(n); }
  static void validate_order(unsigned p) {
    if (p < 1) throw std::invalid_argument("order p must be >= 1");
  }
};

template <class S>
using order_t = typename num_traits<S>::order;

template <class S>
double to_double(const S& x) {
  return num_traits<S>::to_double(x);
}

/// p-th root of a cost, always as a double (roots of rationals are
/// irrational in general; exact-mode comparisons stay on p-th powers).
template <class S>
double root(const S& cost, order_t<S> p) {
  double c = to_double(cost);
  double pd = static_cast<double>(p);
  if (pd == 1.0) return c;
  return std::pow(c, 1.0 / pd);
}

/// Parse a scalar from text: plain integers, "num/den", or decimal
/// strings. In exact mode decimals convert exactly (e.g. "0.25" -> 1/4).
inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) return Rational(s);
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    auto e = s.find_first_of("eE");
    if (e == std::string::npos) return Rational(s);
  }
  // Decimal (possibly with exponent): split into mantissa and scale.
  std::string t = s;
  long exp10 = 0;
  auto e = t.find_first_of("eE");
  if (e != std::string::npos) {
    exp10 = std::stol(t.substr(e + 1));
    t = t.substr(0, e);
  }
  dot = t.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(t.size() - dot - 1);
    t.erase(dot, 1);
  }
  if (t.empty() || t == "-" || t == "+")
    throw std::invalid_argument("bad rational literal: " + s);
  Rational r = Rational(t);
  Rational scale(1);
  for (long i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) scale *= 10;
  return exp10 < 0 ? Rational(r / scale) : Rational(r * scale);
}

}  // namespace wasser

#endif
