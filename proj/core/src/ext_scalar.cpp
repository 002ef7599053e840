#include "qk/ext_scalar.hpp"

#include <cctype>
#include <utility>

#include "qk/errors.hpp"

namespace qk {

namespace {

int sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

// Sign of a + b*sqrt2 for rational a, b.
int sign_quadratic(const Rational& a, const Rational& b) {
  const int sa = sign(a);
  const int sb = sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt2 decides, i.e. a^2 vs 2*b^2.
  const Rational a2 = a * a;
  const Rational b2 = 2 * b * b;
  if (a2 == b2) throw Error("sqrt2 rationality violated");  // unreachable
  return a2 > b2 ? sa : sb;
}

}  // namespace

ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) {
  return ExtScalar(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}

ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) {
  return ExtScalar(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}

ExtScalar operator-(const ExtScalar& x) {
  return ExtScalar(-x.a, -x.b, -x.c, -x.d);
}

ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
  // (u + i v)(u' + i v') with u = a + b*sqrt2 etc.; in components:
  // re = u u' - v v', im = u v' + v u', where
  // (a + b r)(a' + b' r) = (a a' + 2 b b') + (a b' + b a') r.
  return ExtScalar(
      x.a * y.a + 2 * x.b * y.b - x.c * y.c - 2 * x.d * y.d,
      x.a * y.b + x.b * y.a - x.c * y.d - x.d * y.c,
      x.a * y.c + 2 * x.b * y.d + x.c * y.a + 2 * x.d * y.b,
      x.a * y.d + x.b * y.c + x.c * y.b + x.d * y.a);
}

ExtScalar& operator+=(ExtScalar& x, const ExtScalar& y) { return x = x + y; }
ExtScalar& operator-=(ExtScalar& x, const ExtScalar& y) { return x = x - y; }
ExtScalar& operator*=(ExtScalar& x, const ExtScalar& y) { return x = x * y; }

ExtScalar conj(const ExtScalar& x) { return ExtScalar(x.a, x.b, -x.c, -x.d); }

ExtScalar norm_sq(const ExtScalar& x) { return x * conj(x); }

ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) {
  if (y.is_zero()) throw DivisionByZero("division by zero scalar");
  // x/y = x * conj(y) / (y * conj(y)); the denominator is real: a + b*sqrt2.
  const ExtScalar num = x * conj(y);
  const ExtScalar den = norm_sq(y);
  // 1/(a + b r) = (a - b r)/(a^2 - 2 b^2); a^2 = 2 b^2 only for a = b = 0.
  const Rational q = den.a * den.a - 2 * den.b * den.b;
  const ExtScalar inv(den.a / q, -den.b / q, Rational(0), Rational(0));
  return num * inv;
}

int sign_real(const ExtScalar& x) {
  if (!x.is_real()) throw DomainError("sign of a non-real scalar");
  return sign_quadratic(x.a, x.b);
}

std::strong_ordering compare_real(const ExtScalar& x, const Rational& q) {
  if (!x.is_real()) throw DomainError("comparison of a non-real scalar");
  const int s = sign_quadratic(x.a - q, x.b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_real(const ExtScalar& x, const ExtScalar& y) {
  if (!x.is_real() || !y.is_real()) throw DomainError("comparison of a non-real scalar");
  const int s = sign_quadratic(x.a - y.a, x.b - y.b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string format_scalar(const ExtScalar& x) {
  struct Term {
    const Rational* coeff;
    const char* suffix;
  };
  const Term terms[] = {{&x.a, ""}, {&x.b, "*r2"}, {&x.c, "*i"}, {&x.d, "*i*r2"}};
  std::string out;
  for (const auto& [coeff, suffix] : terms) {
    if (*coeff == 0) continue;
    if (out.empty()) {
      out = format_rational(*coeff) + suffix;
    } else if (*coeff > 0) {
      out += " + " + format_rational(*coeff) + suffix;
    } else {
      out += " - " + format_rational(-*coeff) + suffix;
    }
  }
  return out.empty() ? "0" : out;
}

ExtScalar parse_scalar(std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw DomainError("scalar syntax error at offset " + std::to_string(pos) + ": " + what +
                      " in '" + std::string(text) + "'");
  };

  ExtScalar result;
  bool first = true;
  skip_ws();
  if (pos == text.size()) fail("empty scalar");
  while (pos < text.size()) {
    int term_sign = 1;
    skip_ws();
    if (!first) {
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        term_sign = -1;
        ++pos;
      } else {
        fail("expected '+' or '-'");
      }
      skip_ws();
    } else if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') term_sign = -1;
      ++pos;
      skip_ws();
    }

    // optional rational coefficient
    bool have_coeff = false;
    Rational coeff(1);
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string digits;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
      Int num(digits);
      Int den(1);
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        std::string dd;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) dd += text[pos++];
        if (dd.empty()) fail("expected denominator");
        den = Int(dd);
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      have_coeff = true;
    }

    // optional algebraic factors: r2 and/or i, '*'-separated
    bool has_r2 = false;
    bool has_i = false;
    while (true) {
      skip_ws();
      size_t save = pos;
      if (have_coeff || has_r2 || has_i) {
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip_ws();
        } else {
          break;
        }
      }
      if (pos + 1 < text.size() && text[pos] == 'r' && text[pos + 1] == '2') {
        if (has_r2) fail("duplicate r2 factor");
        has_r2 = true;
        pos += 2;
      } else if (pos < text.size() && text[pos] == 'i') {
        if (has_i) fail("duplicate i factor");
        has_i = true;
        ++pos;
      } else {
        if (save == pos) fail("expected r2 or i");
        pos = save;
        fail("expected r2 or i after '*'");
      }
    }
    if (!have_coeff && !has_r2 && !has_i) fail("expected a term");

    if (term_sign < 0) coeff = -coeff;
    if (!has_r2 && !has_i) {
      result.a += coeff;
    } else if (has_r2 && !has_i) {
      result.b += coeff;
    } else if (!has_r2 && has_i) {
      result.c += coeff;
    } else {
      result.d += coeff;
    }
    first = false;
    skip_ws();
  }
  return result;
}

}  // namespace qk
