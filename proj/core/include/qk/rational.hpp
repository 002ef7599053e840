#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace qk {

// Arbitrary-precision integers and canonical rationals (reduced, positive
// denominator). Every measure, threshold and weight in the library is one
// of these; there is no floating point anywhere on a result path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^k as an integer, k >= 0.
Int pow2(unsigned k);

// 2^k as a rational, k may be negative.
Rational pow2_rational(long k);

bool is_power_of_two(const Int& w);

// Greatest k with 2^k <= r. Requires r > 0.
long floor_log2(const Rational& r);

// Least k with 2^k >= r. Requires r > 0.
long ceil_log2(const Rational& r);

// "p/q", or "p" when q == 1.
std::string format_rational(const Rational& r);

// Accepts "p" or "p/q" with an optional leading sign. Throws DomainError on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace qk
