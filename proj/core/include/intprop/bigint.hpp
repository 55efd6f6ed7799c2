// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace intprop {

// Arbitrary-precision signed integer. All solver arithmetic is exact;
// magnitudes are never clamped.
using BigInt = mpz_class;

// Floor division (rounds towards minus infinity). Divisor must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Ceiling division. Divisor must be nonzero.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const BigInt& d, const BigInt& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt pow_exact(const BigInt& base, unsigned long n) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), n);
  return r;
}

inline BigInt abs_big(const BigInt& a) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// floor of the real n-th root of a. For even n requires a >= 0.
// GMP's mpz_root truncates towards zero; the result is adjusted so that
// r^n <= a < (r+1)^n holds exactly, which we re-verify by integer powering.
BigInt floor_root(const BigInt& a, unsigned long n);

// ceil of the real n-th root of a. For even n requires a >= 0.
BigInt ceil_root(const BigInt& a, unsigned long n);

inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace intprop
