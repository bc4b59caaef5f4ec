#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "smt/error.hpp"

namespace smt {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" with q > 0, always including the denominator ("1/1", "-3/2").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Shortest form: "3", "-3/2".
inline std::string to_short_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("not a rational: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace smt
