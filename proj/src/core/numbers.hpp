#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace treechild {

// Exact arbitrary-precision integers and rationals. All counting and series
// arithmetic in this library is exact; doubles appear only in final reports.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// (2n-1)!! with the convention (-1)!! = 1.
inline Int odd_double_factorial(unsigned long n) {
  Int r = 1;
  for (unsigned long i = 1; i < 2 * n; i += 2) r *= i;
  return r;
}

inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

inline Int catalan(unsigned long n) {
  Int r = binomial(2 * n, static_cast<long>(n));
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
  return r;
}

// mpq_class(num, den) keeps the fraction as given; GMP arithmetic requires
// canonical form, so every ratio constructor goes through here.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}
inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p/q", or just "p" when q == 1.
inline std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline double to_double(const Rat& v) { return v.get_d(); }

}  // namespace treechild
