#include "qk/rational.hpp"

#include <cctype>

#include "qk/errors.hpp"

namespace qk {

Int pow2(unsigned k) {
  Int w(1);
  return w << k;
}

Rational pow2_rational(long k) {
  if (k >= 0) return Rational(pow2(static_cast<unsigned>(k)));
  return Rational(1, pow2(static_cast<unsigned>(-k)));
}

bool is_power_of_two(const Int& w) {
  if (w <= 0) return false;
  return (w & (w - 1)) == 0;
}

namespace {

// compares 2^k with r > 0; returns -1, 0, +1
int cmp_pow2(long k, const Rational& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  Int lhs, rhs;
  if (k >= 0) {
    lhs = den << static_cast<unsigned>(k);
    rhs = num;
  } else {
    lhs = den;
    rhs = num << static_cast<unsigned>(-k);
  }
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace

long floor_log2(const Rational& r) {
  if (r <= 0) throw DomainError("floor_log2 requires a positive argument");
  const long num_bits = static_cast<long>(msb(numerator(r)));
  const long den_bits = static_cast<long>(msb(denominator(r)));
  long k = num_bits - den_bits;  // within 1 of the answer
  while (cmp_pow2(k, r) > 0) --k;
  while (cmp_pow2(k + 1, r) <= 0) ++k;
  return k;
}

long ceil_log2(const Rational& r) {
  const long f = floor_log2(r);
  return cmp_pow2(f, r) == 0 ? f : f + 1;
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> Int {
    skip_ws();
    std::string digits;
    if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') digits += '-';
      ++pos;
      skip_ws();
    }
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos];
      ++pos;
    }
    if (pos == start) throw DomainError("malformed rational: '" + std::string(text) + "'");
    return Int(digits);
  };

  const Int num = read_int(true);
  skip_ws();
  Int den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int(false);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  skip_ws();
  if (pos != text.size()) throw DomainError("trailing characters in rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace qk
