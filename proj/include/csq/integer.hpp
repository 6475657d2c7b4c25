#pragma once

#include <gmpxx.h>

#include <string>

namespace csq {

// Arbitrary-precision signed integer. GMP's mpz_class already has exactly
// the value semantics we need (sign + magnitude, canonical representation,
// exact arithmetic at any size), so it is used directly rather than wrapped.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer pow_ui(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer ten_pow(unsigned long exp) { return pow_ui(Integer(10), exp); }

// Truncated integer square root.
inline Integer isqrt(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline bool is_even(const Integer& v) {
  return mpz_even_p(v.get_mpz_t()) != 0;
}

}  // namespace csq
