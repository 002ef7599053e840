#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "qk/rational.hpp"

namespace qk {

// An exact element of the field Q(i)(sqrt2):
//
//   (a + b*sqrt2) + i*(c + d*sqrt2)
//
// with rational a, b, c, d. This is the smallest field that carries the
// standard and Hadamard-type bases and still has a decidable ordering on its
// real elements (sqrt2 is irrational, so a + b*sqrt2 = 0 forces a = b = 0).
// Components are kept reduced by Rational itself, so equality is
// component-wise and structural.
struct ExtScalar {
  Rational a, b, c, d;

  ExtScalar() = default;
  ExtScalar(int value) : a(value) {}  // NOLINT: implicit by design, mirrors int -> field
  explicit ExtScalar(Rational real) : a(std::move(real)) {}
  ExtScalar(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static ExtScalar sqrt2() { return ExtScalar(0, 1, 0, 0); }
  static ExtScalar i() { return ExtScalar(0, 0, 1, 0); }
  // 1/sqrt2 = (1/2)*sqrt2, the Hadamard amplitude
  static ExtScalar inv_sqrt2() { return ExtScalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_real() const { return c == 0 && d == 0; }

  friend bool operator==(const ExtScalar&, const ExtScalar&) = default;
};

ExtScalar operator+(const ExtScalar& x, const ExtScalar& y);
ExtScalar operator-(const ExtScalar& x, const ExtScalar& y);
ExtScalar operator-(const ExtScalar& x);
ExtScalar operator*(const ExtScalar& x, const ExtScalar& y);
// Throws DivisionByZero when y == 0.
ExtScalar operator/(const ExtScalar& x, const ExtScalar& y);

ExtScalar& operator+=(ExtScalar& x, const ExtScalar& y);
ExtScalar& operator-=(ExtScalar& x, const ExtScalar& y);
ExtScalar& operator*=(ExtScalar& x, const ExtScalar& y);

ExtScalar conj(const ExtScalar& x);

// x * conj(x); always real and nonnegative.
ExtScalar norm_sq(const ExtScalar& x);

// Sign of the real element a + b*sqrt2. Throws DomainError when x has a
// nonzero imaginary part. Decided by rational sign tests and one squaring;
// no approximation is involved.
int sign_real(const ExtScalar& x);

// Exact three-way comparison of a real field element against a rational.
std::strong_ordering compare_real(const ExtScalar& x, const Rational& q);

// Exact three-way comparison of two real field elements.
std::strong_ordering compare_real(const ExtScalar& x, const ExtScalar& y);

// Canonical text form, e.g. "1/2 + 1/2*r2 - 3/4*i + 2*i*r2"; "0" when zero.
// Zero components are omitted; `r2` denotes sqrt2.
std::string format_scalar(const ExtScalar& x);

// Parses the scalar syntax: signed terms `p/q`, `p/q*r2`, `p/q*i`,
// `p/q*i*r2` (coefficient optional for r2/i terms), whitespace-insensitive.
// Throws DomainError with the offending position on malformed input.
ExtScalar parse_scalar(std::string_view text);

}  // namespace qk
