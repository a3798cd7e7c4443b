#pragma once

// Exact integer and rational arithmetic on top of GMP.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flagvec/errors.hpp"

namespace flagvec {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Canonical "p/q" form, or plain "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw parse_error("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("malformed integer literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

/// Accepts "p" or "p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw parse_error("denominator must be unsigned in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Decimal rendering with a fixed number of significant digits (approximate).
inline std::string to_decimal(const Rational& q, int significant_digits = 12) {
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, static_cast<std::size_t>(significant_digits));
  if (digits.empty()) return "0";
  bool negative = digits[0] == '-';
  if (negative) digits.erase(0, 1);
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
  } else if (static_cast<std::size_t>(exp) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exp)) + "." +
          digits.substr(static_cast<std::size_t>(exp));
  }
  return negative ? "-" + out : out;
}

}  // namespace flagvec
