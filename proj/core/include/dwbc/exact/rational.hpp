#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace dwbc {

using Rational = mpq_class;
using Complex = std::complex<double>;

// "p/q", or "p" when q == 1
std::string to_string(const Rational& q);

// accepts "p/q", "p", "-p/q" and plain decimals such as "0.25"
Rational parse_rational(const std::string& text);

Rational pow(const Rational& x, long k);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Minimal field interface shared by the exact and floating code paths.
template <class T>
struct Field;

template <>
struct Field<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double pivot_score(const Rational& x) { return sgn(x) == 0 ? 0.0 : 1.0; }
};

template <>
struct Field<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long v) { return static_cast<double>(v); }
  static bool is_zero(double x) { return x == 0.0; }
  static double pivot_score(double x) { return x < 0 ? -x : x; }
};

template <>
struct Field<Complex> {
  static Complex zero() { return Complex(0.0, 0.0); }
  static Complex one() { return Complex(1.0, 0.0); }
  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static double pivot_score(const Complex& x) { return std::abs(x); }
};

}  // namespace dwbc
