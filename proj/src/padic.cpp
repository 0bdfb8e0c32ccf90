#include "rauzy/padic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

int NewtonPolygon::positive_root_count() const {
  int c = 0;
  for (auto& s : segments)
    if (s.slope < 0) c += s.length;
  return c;
}

NewtonPolygon newton_polygon(const IntPoly& f, const BigInt& p) {
  NewtonPolygon poly{p, {}};
  std::vector<std::pair<int, int>> pts;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) pts.push_back({static_cast<int>(i), padic_val(f[i], p)});
  std::vector<std::pair<int, int>> hull;
  for (auto& q : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // remove b when it lies on or above the segment a-q
      long cross = long(b.first - a.first) * (q.second - a.second) - long(b.second - a.second) * (q.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    int len = hull[i].first - hull[i - 1].first;
    Rational slope(hull[i].second - hull[i - 1].second, len);
    slope.canonicalize();
    poly.segments.push_back({hull[i - 1].first, len, slope});
  }
  return poly;
}

std::vector<BigInt> prime_factors(const BigInt& n_in) {
  BigInt n = abs(n_in);
  std::vector<BigInt> ps;
  for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (d > 10'000'000) break;
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      ps.push_back(d);
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) fail(ErrorKind::ResourceCap, "norm too large to factor");
    ps.push_back(n);
  }
  return ps;
}

std::vector<BigInt> alpha_primes(const IntPoly& f) { return prime_factors(f.at(0)); }

namespace {

using Poly = std::vector<BigInt>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const BigInt& m) {
  for (auto& c : a) c = mod_pos(c, m);
  ptrim(a);
  return a;
}

Poly pmul(const Poly& a, const Poly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return pmod(r, m);
}

Poly psub(const Poly& a, const Poly& b, const BigInt& m) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return pmod(r, m);
}

// Remainder modulo b over Z/m, b's leading coefficient invertible mod m.
Poly prem(Poly a, const Poly& b, const BigInt& m) {
  a = pmod(a, m);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t());
  while (a.size() >= b.size()) {
    BigInt c = mod_pos(a.back() * inv, m);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a = pmod(a, m);
  }
  return a;
}

Poly pgcd(Poly a, Poly b, const BigInt& p) {
  a = pmod(a, p);
  b = pmod(b, p);
  while (!b.empty()) {
    Poly r = prem(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

Poly ppowmod(Poly base, BigInt e, const Poly& mod, const BigInt& p) {
  Poly r{1};
  base = prem(base, mod, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = prem(pmul(r, base, p), mod, p);
    e >>= 1;
    if (e > 0) base = prem(pmul(base, base, p), mod, p);
  }
  return r;
}

bool irreducible_mod_p(const Poly& r, const BigInt& p) {
  int d = static_cast<int>(r.size()) - 1;
  if (d <= 1) return true;
  Poly xp{0, 1};
  for (int i = 1; i <= d / 2; ++i) {
    xp = ppowmod(xp, p, r, p);
    Poly t = psub(xp, Poly{0, 1}, p);
    Poly g = pgcd(r, t, p);
    if (g.size() > 1) return false;
  }
  return true;
}

BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  int n = static_cast<int>(a.size());
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return n == 0 ? BigInt(1) : BigInt(sign * a[n - 1][n - 1]);
}

}  // namespace

AlphaPartRing::AlphaPartRing(const IntPoly& f, const BigInt& p, int precision)
    : f_(f), p_(p), n_prec_(precision), polygon_(newton_polygon(f, p)) {
  if (precision < 2) fail(ErrorKind::Validation, "p-adic precision must be at least 2");
  mod_ = big_pow(p, precision);
  int n = rauzy::degree(f);
  int d = 0;
  while (d <= n && mpz_divisible_p(f[d].get_mpz_t(), p.get_mpz_t())) ++d;
  if (d == 0) fail(ErrorKind::Validation, "prime " + p.get_str() + " does not divide the norm of alpha");
  if (d != polygon_.positive_root_count()) fail(ErrorKind::Internal, "Newton polygon and reduction disagree");
  // Hensel lifting of f = g h with g = x^d, h(0) a unit modulo p.
  Poly hbar(f.begin() + d, f.end());
  hbar = pmod(hbar, p);
  // t = hbar^{-1} mod x^d over F_p
  Poly t(d, 0);
  {
    BigInt inv0;
    mpz_invert(inv0.get_mpz_t(), hbar[0].get_mpz_t(), p.get_mpz_t());
    for (int k = 0; k < d; ++k) {
      BigInt s = (k == 0) ? BigInt(1) : BigInt(0);
      for (int j = 1; j <= k && j < static_cast<int>(hbar.size()); ++j) s -= hbar[j] * t[k - j];
      t[k] = mod_pos(s * inv0, p);
    }
  }
  Poly g(d + 1, 0), h = hbar;
  g[d] = 1;
  Poly fz(f.begin(), f.end());
  BigInt pk = p;
  for (int k = 1; k < precision; ++k) {
    Poly diff = psub(fz, pmul(g, h, mod_), mod_);
    Poly e;
    for (auto& c : diff) {
      if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t())) fail(ErrorKind::Internal, "Hensel lifting lost congruence");
      e.push_back(mod_pos(c / pk, p));
    }
    ptrim(e);
    Poly b = pmul(e, t, p);
    if (static_cast<int>(b.size()) > d) b.resize(d);
    ptrim(b);
    Poly rest = psub(e, pmul(b, hbar, p), p);
    Poly a;
    for (std::size_t i = d; i < rest.size(); ++i) a.push_back(rest[i]);
    for (std::size_t i = 0; i < b.size(); ++i) g[i] = mod_pos(g[i] + pk * b[i], mod_);
    if (h.size() < a.size()) h.resize(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) h[i] = mod_pos(h[i] + pk * a[i], mod_);
    pk *= p;
  }
  g_ = g;
  h_ = h;
  if (!psub(fz, pmul(g_, h_, mod_), mod_).empty()) fail(ErrorKind::Internal, "lifted factors do not multiply to f");
  // Local structure: one negative slope with an irreducible residual polynomial.
  std::vector<NewtonSegment> neg;
  for (auto& s : polygon_.segments)
    if (s.slope < 0) neg.push_back(s);
  if (neg.size() != 1)
    fail(ErrorKind::Unsupported, "several slopes above p = " + p.get_str() + " (more than one alpha-part prime)");
  Rational slope = -neg[0].slope;
  int hnum = static_cast<int>(slope.get_num().get_si());
  int eden = static_cast<int>(slope.get_den().get_si());
  int v0 = padic_val(f[0], p);
  int r = d / eden;
  Poly res(r + 1, 0);
  for (int k = 0; k <= r; ++k) {
    int i = k * eden;
    int expect = v0 - k * hnum;
    if (f[i] != 0 && padic_val(f[i], p) == expect) res[k] = mod_pos(f[i] / big_pow(p, expect), p);
  }
  ptrim(res);
  if (!irreducible_mod_p(res, p))
    fail(ErrorKind::Unsupported, "residual polynomial above p = " + p.get_str() + " is reducible (several primes or non-regular)");
  e_ = eden;
  f_deg_ = r;
  alpha_val_ = hnum;
  // With a regular Newton polygon the factorization over Q_p determines the
  // prime above p without knowing the index of Z[alpha].
  index_unverified_ = false;
}

std::vector<BigInt> AlphaPartRing::representatives() const {
  std::vector<BigInt> r;
  if (f_deg_ != 1) return r;
  for (BigInt i = 0; i < p_; ++i) r.push_back(i);
  return r;
}

std::string AlphaPartRing::describe() const {
  std::ostringstream os;
  os << "Z_" << p_.get_str() << "[x]/(g), deg " << degree() << ", e=" << e_ << ", f=" << f_deg_;
  return os.str();
}

std::vector<BigInt> AlphaPartRing::reduce(const std::vector<BigInt>& poly) const {
  Poly r = prem(poly, g_, mod_);
  r.resize(degree(), 0);
  return r;
}

std::vector<BigInt> AlphaPartRing::multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
  return reduce(pmul(a, b, mod_));
}

std::optional<int> AlphaPartRing::norm_valuation(const std::vector<BigInt>& u) const {
  int m = degree();
  std::vector<std::vector<BigInt>> mat(m, std::vector<BigInt>(m));
  Poly xj{1};
  for (int j = 0; j < m; ++j) {
    Poly col = multiply(u, xj);
    for (int i = 0; i < m; ++i) mat[i][j] = col[i];
    xj.insert(xj.begin(), BigInt(0));
  }
  BigInt det = mod_pos(bareiss_det(mat), mod_);
  if (det == 0) return std::nullopt;
  return padic_val(det, p_);
}

PadicElement::PadicElement(const AlphaPartRing* ring, int shift, std::vector<BigInt> u)
    : ring_(ring), shift_(shift), u_(std::move(u)) {
  u_.resize(ring_->degree(), 0);
  for (auto& c : u_) c = mod_pos(c, ring_->modulus());
}

bool PadicElement::is_zero_to_precision() const {
  for (auto& c : u_)
    if (c != 0) return false;
  return true;
}

int PadicElement::precision_valuation() const { return ring_->ramification() * (shift_ + ring_->precision()); }

std::optional<int> PadicElement::valuation() const {
  if (is_zero_to_precision()) return std::nullopt;
  int e = ring_->ramification();
  if (ring_->digit_model()) {
    int best = 1 << 30;
    for (int j = 0; j < static_cast<int>(u_.size()); ++j)
      if (u_[j] != 0) best = std::min(best, e * padic_val(u_[j], ring_->prime()) + j);
    return e * shift_ + best;
  }
  auto nv = ring_->norm_valuation(u_);
  if (!nv) return std::nullopt;
  if (*nv % ring_->inertia() != 0) fail(ErrorKind::Internal, "local norm valuation not divisible by inertia degree");
  return e * shift_ + *nv / ring_->inertia();
}

PadicElement PadicElement::operator+(const PadicElement& o) const {
  int s = std::min(shift_, o.shift_);
  std::vector<BigInt> u(u_.size());
  BigInt a = big_pow(ring_->prime(), shift_ - s), b = big_pow(ring_->prime(), o.shift_ - s);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = u_[i] * a + o.u_[i] * b;
  return PadicElement(ring_, s, std::move(u));
}

PadicElement PadicElement::operator-() const {
  std::vector<BigInt> u(u_.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = -u_[i];
  return PadicElement(ring_, shift_, std::move(u));
}

PadicElement PadicElement::operator*(const PadicElement& o) const {
  return PadicElement(ring_, shift_ + o.shift_, ring_->multiply(u_, o.u_));
}

PadicElement PadicElement::scale(const BigInt& c) const {
  std::vector<BigInt> u(u_.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = u_[i] * c;
  return PadicElement(ring_, shift_, std::move(u));
}

PadicElement embed_padic(const AlgebraicNumber& x, const AlphaPartRing& ring) {
  const BigInt& p = ring.prime();
  BigInt den = x.denominator();
  int t = 0;
  while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
    den /= p;
    ++t;
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ring.modulus().get_mpz_t());
  std::vector<BigInt> poly;
  for (auto& c : x.numerators()) poly.push_back(c * inv);
  return PadicElement(&ring, -t, ring.reduce(poly));
}

std::optional<int> exact_valuation(const AlgebraicNumber& x, const AlphaPartRing& ring) {
  if (x.is_zero()) return std::nullopt;
  auto v = embed_padic(x, ring).valuation();
  if (v) return v;
  int n = ring.precision();
  for (int k = 0; k < 4; ++k) {
    n *= 2;
    AlphaPartRing bigger = ring.with_precision(n);
    v = embed_padic(x, bigger).valuation();
    if (v) return v;
  }
  fail(ErrorKind::Precision, "p-adic valuation undetermined after precision escalation");
}

long double abs_value(int valuation, const AlphaPartRing& ring) {
  return std::pow(to_long_double(ring.residue_norm()), -static_cast<long double>(valuation));
}

AlphaDigits alpha_digits(const PadicElement& z, int count) {
  const AlphaPartRing& ring = *z.ring();
  if (!ring.digit_model()) fail(ErrorKind::Unsupported, "alpha is not a uniformiser with residue degree 1");
  AlphaDigits out;
  auto v = z.valuation();
  if (!v) {
    out.digits.assign(count, 0);
    return out;
  }
  out.first = std::min(0, *v);
  PadicElement w = z;
  PadicElement a(&ring, 0, ring.reduce({0, 1}));
  for (int i = 0; i < -out.first; ++i) w = w * a;
  const BigInt& p = ring.prime();
  std::vector<BigInt> u = w.coefficients();
  int prec = ring.precision();
  if (w.shift() < 0) {
    BigInt div = big_pow(p, -w.shift());
    for (auto& c : u) {
      if (!mpz_divisible_p(c.get_mpz_t(), div.get_mpz_t())) fail(ErrorKind::Internal, "non-integral digit input");
      c /= div;
    }
    prec += w.shift();
  } else if (w.shift() > 0) {
    for (auto& c : u) c *= big_pow(p, w.shift());
  }
  const auto& g = ring.factor();
  int m = ring.degree();
  BigInt unit = g[0] / p, winv;
  mpz_invert(winv.get_mpz_t(), unit.get_mpz_t(), ring.modulus().get_mpz_t());
  const BigInt& mod = ring.modulus();
  for (int k = 0; k < count; ++k) {
    if (prec - k < 1) fail(ErrorKind::Precision, "alpha-adic digits exceed working precision");
    BigInt d = mod_pos(u[0], p);
    out.digits.push_back(static_cast<int>(d.get_si()));
    BigInt q = (u[0] - d) / p;
    BigInt t = mod_pos(q * winv, mod);
    std::vector<BigInt> next(m);
    for (int j = 1; j < m; ++j) next[j - 1] = mod_pos(u[j] - t * g[j], mod);
    next[m - 1] = mod_pos(-t, mod);
    u = std::move(next);
  }
  return out;
}

long double euclidean_model(const AlphaDigits& d, long double residue_norm) {
  long double r = 0;
  for (std::size_t i = d.digits.size(); i-- > 0;) {
    int idx = d.first + static_cast<int>(i);
    r += d.digits[i] * std::pow(residue_norm, -static_cast<long double>(idx) - 1);
  }
  return r;
}

long double coefficient_model(const PadicElement& z, int digits) {
  const AlphaPartRing& ring = *z.ring();
  long double p = to_long_double(ring.prime());
  int m = ring.degree();
  std::vector<BigInt> u = z.coefficients();
  long double r = 0, w = 1 / p;
  for (int k = 0; k < digits; ++k)
    for (int j = 0; j < m; ++j) {
      BigInt d = mod_pos(u[j], ring.prime());
      u[j] = (u[j] - d) / ring.prime();
      r += to_long_double(d) * w;
      w /= p;
    }
  return r * std::pow(p, -static_cast<long double>(z.shift()) * m);
}

FastPadicRing::FastPadicRing(const AlphaPartRing& ring) : m_(ring.degree()) {
  if (!ring.digit_model()) fail(ErrorKind::Unsupported, "fast p-adic ring needs alpha to be a uniformiser with f = 1");
  if (m_ > kMaxDegree) fail(ErrorKind::Unsupported, "alpha-part degree too large for the fast ring");
  if (!ring.prime().fits_ulong_p() || ring.prime() > (1ul << 30)) fail(ErrorKind::Unsupported, "prime too large for the fast ring");
  p_ = ring.prime().get_ui();
  mod_ = 1;
  k_ = 0;
  while (static_cast<unsigned __int128>(mod_) * p_ < (static_cast<unsigned __int128>(1) << 62)) {
    mod_ *= p_;
    ++k_;
  }
  k_ = std::min(k_, ring.precision());
  mod_ = 1;
  for (int i = 0; i < k_; ++i) mod_ *= p_;
  BigInt bm(std::to_string(mod_));
  for (int i = 0; i <= m_; ++i) g_[i] = mod_pos(ring.factor()[i], bm).get_ui();
  BigInt unit = ring.factor()[0] / ring.prime(), inv;
  mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), bm.get_mpz_t());
  winv_ = mod_pos(inv, bm).get_ui();
}

FastPadicRing::Elem FastPadicRing::from(const PadicElement& z, int alpha_shift) const {
  const AlphaPartRing& ring = *z.ring();
  PadicElement w = z;
  PadicElement a(&ring, 0, ring.reduce({0, 1}));
  for (int i = 0; i < alpha_shift; ++i) w = w * a;
  std::vector<BigInt> u = w.coefficients();
  if (w.shift() < 0) {
    BigInt div = big_pow(ring.prime(), -w.shift());
    for (auto& c : u) {
      if (!mpz_divisible_p(c.get_mpz_t(), div.get_mpz_t()))
        fail(ErrorKind::Internal, "fast p-adic conversion of a non-integral element");
      c /= div;
    }
  } else {
    for (auto& c : u) c *= big_pow(ring.prime(), w.shift());
  }
  Elem e;
  BigInt bm(std::to_string(mod_));
  for (int i = 0; i < m_; ++i) e.c[i] = mod_pos(u[i], bm).get_ui();
  for (int i = 0; i < -alpha_shift; ++i) {
    if (e.c[0] % p_ != 0) fail(ErrorKind::Internal, "fast p-adic conversion of a non-integral element");
    e = div_alpha(e);
  }
  return e;
}

FastPadicRing::Elem FastPadicRing::add(const Elem& a, const Elem& b) const {
  Elem r;
  for (int i = 0; i < m_; ++i) {
    std::uint64_t s = a.c[i] + b.c[i];
    r.c[i] = s >= mod_ ? s - mod_ : s;
  }
  return r;
}

FastPadicRing::Elem FastPadicRing::sub(const Elem& a, const Elem& b) const {
  Elem r;
  for (int i = 0; i < m_; ++i) r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + mod_ - b.c[i];
  return r;
}

FastPadicRing::Elem FastPadicRing::scale(const Elem& a, std::int64_t k) const {
  std::uint64_t kk = k >= 0 ? static_cast<std::uint64_t>(k) % mod_ : mod_ - (static_cast<std::uint64_t>(-k) % mod_);
  if (kk == mod_) kk = 0;
  Elem r;
  for (int i = 0; i < m_; ++i) r.c[i] = mulmod(a.c[i], kk);
  return r;
}

bool FastPadicRing::is_zero(const Elem& a) const {
  for (int i = 0; i < m_; ++i)
    if (a.c[i]) return false;
  return true;
}

int FastPadicRing::valuation(const Elem& a, int cap) const {
  int best = cap;
  for (int j = 0; j < m_; ++j) {
    std::uint64_t x = a.c[j];
    if (x == 0) continue;
    int v = 0;
    while (x % p_ == 0) {
      x /= p_;
      ++v;
    }
    best = std::min(best, m_ * v + j);
  }
  return best;
}

FastPadicRing::Elem FastPadicRing::shift_digit(const Elem& a, std::uint64_t* digit) const {
  std::uint64_t d = a.c[0] % p_;
  if (digit) *digit = d;
  std::uint64_t q = (a.c[0] - d) / p_;
  std::uint64_t t = mulmod(q, winv_);
  Elem r;
  for (int j = 1; j < m_; ++j) {
    std::uint64_t tg = mulmod(t, g_[j]);
    r.c[j - 1] = a.c[j] >= tg ? a.c[j] - tg : a.c[j] + mod_ - tg;
  }
  r.c[m_ - 1] = t == 0 ? 0 : mod_ - t;
  return r;
}

FastPadicRing::Elem FastPadicRing::div_alpha(const Elem& a) const { return shift_digit(a, nullptr); }

FastPadicRing::Elem FastPadicRing::mul_alpha(const Elem& a) const {
  // alpha^m = -(g_0 + ... + g_{m-1} alpha^{m-1})
  std::uint64_t top = a.c[m_ - 1];
  Elem r;
  for (int j = m_ - 1; j >= 0; --j) {
    std::uint64_t lower = j > 0 ? a.c[j - 1] : 0;
    std::uint64_t tg = mulmod(top, g_[j]);
    r.c[j] = lower >= tg ? lower - tg : lower + mod_ - tg;
  }
  return r;
}

FastPadicRing::Elem FastPadicRing::from_digit(std::uint64_t d) const {
  Elem r;
  r.c[0] = d % mod_;
  return r;
}

long double FastPadicRing::model(const Elem& a, int offset, int count) const {
  Elem cur = a;
  long double r = 0, w = std::pow(static_cast<long double>(p_), static_cast<long double>(offset) - 1);
  for (int i = 0; i < count; ++i) {
    std::uint64_t d;
    cur = shift_digit(cur, &d);
    r += d * w;
    w /= static_cast<long double>(p_);
  }
  return r;
}

}  // namespace rauzy
