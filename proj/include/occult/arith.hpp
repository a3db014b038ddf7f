// Exact integer and rational scalars used throughout the library.

#ifndef OCCULT_ARITH_HPP_
#define OCCULT_ARITH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace occult {

using Integer = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search or enumeration would need to exceed a configured cap.
struct BoundExceeded : Error {
  using Error::Error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline Integer abs_value(const Integer& a) { return Integer(abs(a)); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division and the matching nonnegative remainder (m > 0).
inline Integer floor_div(const Integer& a, const Integer& m) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Truncating quotient, as used by Euclidean reduction steps.
inline Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Nearest integer, halves rounded up.
inline Integer round_of(const Rational& r) {
  Rational shifted = r + Rational(1, 2);
  return floor_of(shifted);
}

// Representative of r modulo m in [0, m).
inline Rational mod_rational(const Rational& r, const Integer& m) {
  Rational q = r / Rational(m);
  Rational out = r - Rational(floor_of(q) * m);
  out.canonicalize();
  return out;
}

// num / den in lowest terms (the two-argument mpq_class constructor does not
// canonicalize).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r))
    fail("rational value " + r.get_str() + " is not integral");
  return r.get_num();
}

inline bool fits_int64(const Integer& a) {
  return a.fits_slong_p() && sizeof(long) == sizeof(std::int64_t);
}

inline long long to_int64(const Integer& a) {
  if (!fits_int64(a))
    throw BoundExceeded("integer " + a.get_str() + " does not fit in 64 bits");
  return a.get_si();
}

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

// Euler totient of a small positive integer.
inline unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline bool is_prime_small(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace occult

#endif  // OCCULT_ARITH_HPP_
