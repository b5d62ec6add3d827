#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "weyl/error.hpp"

namespace weyl {

/// Exact rational; mpq_class keeps gcd(num, den) = 1 and den > 0 after canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Accepts "p", "-p", "p/q".
inline Rat parse_rat(std::string_view text) {
  Rat r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw DomainError("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int binomial(unsigned n, unsigned k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace weyl
