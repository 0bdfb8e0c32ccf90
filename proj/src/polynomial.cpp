#include "rauzy/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

BigInt eval(const IntPoly& f, const BigInt& x) {
  BigInt r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

Rational eval(const IntPoly& f, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + Rational(f[i]);
  return r;
}

Complex eval(const IntPoly& f, const Complex& z) {
  Complex r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * z + Complex(to_long_double(f[i]), 0);
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

bool poly_divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  if (b.empty()) return false;
  IntPoly rem = a;
  trim(rem);
  int db = degree(b);
  IntPoly q(std::max<int>(0, degree(rem) - db + 1), 0);
  while (!rem.empty() && degree(rem) >= db) {
    int shift = degree(rem) - db;
    if (!mpz_divisible_p(rem.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    BigInt c = rem.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= db; ++i) rem[i + shift] -= c * b[i];
    trim(rem);
  }
  if (!rem.empty()) return false;
  if (quotient) *quotient = q;
  return true;
}

std::string poly_to_string(const IntPoly& f, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    const BigInt& c = f[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

IntPoly char_poly(const IntMatrix& m) {
  int n = m.rows();
  BigMatrix a = to_big(m);
  IntPoly c(n + 1, 0);
  c[n] = 1;
  BigMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    BigMatrix next = a * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    BigMatrix am = a * mk;
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {

std::vector<BigInt> divisors(const BigInt& value) {
  BigInt v = abs(value);
  std::vector<std::pair<BigInt, int>> fac;
  BigInt d = 2;
  while (d * d <= v) {
    if (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
      int e = 0;
      while (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
        v /= d;
        ++e;
      }
      fac.push_back({d, e});
    }
    d += (d == 2 ? 1 : 2);
    if (d > 10'000'000) fail(ErrorKind::ResourceCap, "integer too large to factor in irreducibility test");
  }
  if (v > 1) fac.push_back({v, 1});
  std::vector<BigInt> divs{1};
  for (auto& [p, e] : fac) {
    std::size_t cur = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Lagrange interpolation through (xs[i], ys[i]); returns false if not integral.
bool interpolate(const std::vector<long>& xs, const std::vector<BigInt>& ys, IntPoly& out) {
  std::size_t m = xs.size();
  RatPoly acc(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    RatPoly basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      RatPoly next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= Rational(xs[i] - xs[j]);
    }
    Rational scale = Rational(ys[i]) / denom;
    for (std::size_t k = 0; k < basis.size() && k < m; ++k) acc[k] += basis[k] * scale;
  }
  out.assign(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    if (acc[k].get_den() != 1) return false;
    out[k] = acc[k].get_num();
  }
  trim(out);
  return true;
}

BigInt binom(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

bool is_irreducible_over_Q(const IntPoly& f_in) {
  IntPoly f = f_in;
  trim(f);
  int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (abs(f.back()) != 1) fail(ErrorKind::Validation, "irreducibility test expects a monic polynomial");
  if (n > 8) fail(ErrorKind::Validation, "irreducibility test limited to degree <= 8");
  if (f[0] == 0) return false;
  // Rational roots of a monic integer polynomial are integer divisors of f(0).
  for (const BigInt& d : divisors(f[0]))
    if (eval(f, d) == 0 || eval(f, BigInt(-d)) == 0) return false;
  // Mignotte: coefficients of a degree-d factor are bounded by C(d,j) * ||f||_2.
  Rational norm2 = 0;
  for (auto& c : f) norm2 += Rational(c * c);
  long double l2 = std::sqrt(to_long_double(norm2));
  std::vector<long> pool;
  for (long x = 0; pool.size() < 40; x = (x > 0 ? -x : -x + 1)) pool.push_back(x);
  std::vector<std::pair<std::size_t, long>> ranked;
  for (long x : pool) ranked.push_back({divisors(eval(f, BigInt(x))).size(), x});
  std::sort(ranked.begin(), ranked.end());
  for (int d = 2; d <= n / 2; ++d) {
    std::vector<long> xs;
    std::vector<std::vector<BigInt>> choices;
    for (int i = 0; i <= d; ++i) {
      xs.push_back(ranked[i].second);
      std::vector<BigInt> opts;
      for (auto& dv : divisors(eval(f, BigInt(xs.back())))) {
        opts.push_back(dv);
        if (i > 0) opts.push_back(-dv);  // the overall sign is fixed by the first value
      }
      choices.push_back(std::move(opts));
    }
    std::vector<std::size_t> idx(d + 1, 0);
    while (true) {
      std::vector<BigInt> ys(d + 1);
      for (int i = 0; i <= d; ++i) ys[i] = choices[i][idx[i]];
      IntPoly g;
      if (interpolate(xs, ys, g) && degree(g) == d && abs(g.back()) == 1) {
        bool within = true;
        for (int j = 0; j <= d && within; ++j)
          within = to_long_double(BigInt(abs(g[j]))) <= to_long_double(binom(d, j)) * l2 + 1;
        if (within && poly_divides(g, f)) return false;
      }
      int pos = 0;
      while (pos <= d && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
      if (pos > d) break;
    }
  }
  return true;
}

std::vector<Complex> complex_roots(const IntPoly& f) {
  int n = degree(f);
  std::vector<Complex> z(n);
  if (n <= 0) return z;
  long double lead = to_long_double(f.back());
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(to_long_double(f[i]) / lead));
  bound += 1;
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int i = 0; i < n; ++i) z[i] = std::polar(bound * 0.9L, 2 * pi * (i + 0.25L) / n + 0.4L);
  IntPoly df = derivative(f);
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      Complex fz = eval(f, z[i]), dz = eval(df, z[i]);
      if (std::abs(fz) == 0) continue;
      Complex ratio = fz / dz;
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      Complex w = ratio / (1.0L - ratio * s);
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (worst < 1e-19L) break;
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) {
      Complex dz = eval(df, z[i]);
      if (std::abs(dz) == 0) break;
      z[i] -= eval(f, z[i]) / dz;
    }
  return z;
}

std::vector<RootDisc> root_discs(const IntPoly& f, const std::vector<Complex>& approx) {
  int n = degree(f);
  long double lead = to_long_double(f.back());
  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<RootDisc> discs;
  for (int i = 0; i < n; ++i) {
    Complex fz = eval(f, approx[i]) / lead;
    long double mag = 0, az = std::abs(approx[i]);
    for (int k = n; k >= 0; --k) mag = mag * az + std::fabs(to_long_double(f[k]) / lead);
    long double err = 4 * (n + 2) * eps * mag;
    long double den = 1;
    for (int j = 0; j < n; ++j)
      if (j != i) den *= std::abs(approx[i] - approx[j]);
    long double w = (std::abs(fz) + err) / den;
    discs.push_back({approx[i], n * w * (1 + 1e-6L) + 1e-30L});
  }
  return discs;
}

PisotVerdict is_pisot(const IntPoly& f) {
  PisotVerdict v;
  int n = degree(f);
  if (n < 1) {
    v.reason = "constant polynomial";
    return v;
  }
  v.unit = abs(f[0]) == 1;
  auto roots = complex_roots(f);
  auto discs = root_discs(f, roots);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(discs[i].center - discs[j].center) <= discs[i].radius + discs[j].radius)
        fail(ErrorKind::Precision, "root inclusion discs overlap; cannot certify root moduli");
  // A disc meeting the real axis that is disjoint from the others holds a real root.
  for (auto& d : discs)
    if (std::fabs(d.center.imag()) <= d.radius) d.center = Complex(d.center.real(), 0);
  std::size_t dom = 0;
  for (std::size_t i = 1; i < discs.size(); ++i)
    if (std::abs(discs[i].center) > std::abs(discs[dom].center)) dom = i;
  std::swap(discs[0], discs[dom]);
  v.dominant = discs[0].center;
  v.discs = discs;
  if (discs[0].center.imag() != 0 || discs[0].center.real() - discs[0].radius <= 1) {
    v.reason = "no real root certified > 1";
    return v;
  }
  for (std::size_t i = 1; i < discs.size(); ++i)
    if (std::abs(discs[i].center) + discs[i].radius >= 1) {
      v.reason = "a conjugate is not certified inside the unit disc";
      return v;
    }
  v.pisot = true;
  return v;
}

namespace {

// Sign of f(t / 2^k).
int sign_at_dyadic(const IntPoly& f, const BigInt& t, unsigned long k) {
  BigInt acc = 0;
  int n = degree(f);
  for (int i = n; i >= 0; --i) acc = acc * t + (f[i] << (k * (n - i)));
  return sgn(acc);
}

}  // namespace

DyadicEnclosure refine_real_root(const IntPoly& f, long double approx, unsigned long bits) {
  const unsigned long k0 = 48;
  BigInt center = BigInt(std::to_string(static_cast<long long>(std::floor(std::ldexp(approx, static_cast<int>(k0))))));
  BigInt delta = BigInt(1) << 12;
  BigInt lo, hi;
  for (int tries = 0;; ++tries) {
    lo = center - delta;
    hi = center + delta;
    int sl = sign_at_dyadic(f, lo, k0), sh = sign_at_dyadic(f, hi, k0);
    if (sl == 0) return {lo << (bits - k0), bits};
    if (sh == 0) return {hi << (bits - k0), bits};
    if (sl != sh) break;
    delta *= 16;
    if (tries > 12) fail(ErrorKind::Precision, "could not bracket the dominant root");
  }
  int sl = sign_at_dyadic(f, lo, k0);
  unsigned long k = k0;
  // Interval [lo, hi] at scale 2^k; bisect down to width 1 at scale 2^bits.
  while (k < bits || hi - lo > 1) {
    if (hi - lo == 1) {
      lo <<= 1;
      hi <<= 1;
      ++k;
    }
    BigInt mid = (lo + hi) / 2;
    int sm = sign_at_dyadic(f, mid, k);
    if (sm == 0) return {mid << (bits - k), bits};
    if (sm == sl)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, bits};
}

}  // namespace rauzy
