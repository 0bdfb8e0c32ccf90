#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rauzy {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_big(const BigInt& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) h = hash_combine(h, mpz_getlimbn(z.get_mpz_t(), i));
  return h;
}

inline std::size_t hash_rational(const Rational& q) {
  return hash_combine(hash_big(q.get_num()), hash_big(q.get_den()));
}

// v_p(z) for z != 0.
inline int padic_val(const BigInt& z, const BigInt& p) {
  if (z == 0) return 1 << 30;
  BigInt t = z;
  int v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

inline BigInt big_pow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Non-negative residue of z modulo m (m > 0).
inline BigInt mod_pos(const BigInt& z, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

long double to_long_double(const Rational& q);
long double to_long_double(const BigInt& z);

}  // namespace rauzy
