#include "rauzy/bigint.hpp"

#include <cmath>

namespace rauzy {

namespace {

// z = m * 2^e with |m| < 2^64 carrying the top 64 bits.
void split(const BigInt& z, long double& m, long& e) {
  std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (bits <= 64) {
    BigInt a = abs(z);
    unsigned long long v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, a.get_mpz_t());
    m = static_cast<long double>(v);
    if (z < 0) m = -m;
    e = 0;
    return;
  }
  long shift = static_cast<long>(bits) - 64;
  BigInt t = abs(z) >> shift;
  unsigned long long v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, t.get_mpz_t());
  m = static_cast<long double>(v);
  if (z < 0) m = -m;
  e = shift;
}

}  // namespace

long double to_long_double(const BigInt& z) {
  long double m;
  long e;
  split(z, m, e);
  return std::ldexp(m, static_cast<int>(e));
}

long double to_long_double(const Rational& q) {
  if (q == 0) return 0.0L;
  long double mn, md;
  long en, ed;
  split(q.get_num(), mn, en);
  split(q.get_den(), md, ed);
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

}  // namespace rauzy
