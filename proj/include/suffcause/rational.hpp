#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "error.hpp"

namespace suffcause {

// Exact arithmetic for every probability in the library.
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }

// Always "num/den", including integers ("1/1").
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto digits = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw ModelError("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ModelError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace suffcause
