#include "rauzy/numberfield.hpp"

#include <cctype>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

AlgebraicNumber::AlgebraicNumber(const NumberField* field, std::vector<BigInt> num, BigInt den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  if (static_cast<int>(num_.size()) != field_->degree()) fail(ErrorKind::Internal, "coefficient count mismatch");
  if (den_ == 0) fail(ErrorKind::Validation, "zero denominator");
  normalize();
}

AlgebraicNumber::AlgebraicNumber(const NumberField* field, const std::vector<Rational>& coeffs) : field_(field) {
  int n = field->degree();
  if (static_cast<int>(coeffs.size()) != n) fail(ErrorKind::Internal, "coefficient count mismatch");
  BigInt l = 1;
  for (auto& q : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  num_.resize(n);
  for (int i = 0; i < n; ++i) num_[i] = coeffs[i].get_num() * (l / coeffs[i].get_den());
  den_ = l;
  normalize();
}

void AlgebraicNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  for (auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<Rational> AlgebraicNumber::coeffs() const {
  std::vector<Rational> r;
  for (auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    r.push_back(q);
  }
  return r;
}

bool AlgebraicNumber::is_zero() const {
  for (auto& c : num_)
    if (c != 0) return false;
  return true;
}

int AlgebraicNumber::sign() const { return field_->sign_of(num_); }

long double AlgebraicNumber::approx() const {
  long double a = field_->alpha_approx(), r = 0;
  for (std::size_t i = num_.size(); i-- > 0;) r = r * a + to_long_double(num_[i]);
  return r / to_long_double(den_);
}

std::string AlgebraicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = num_.size(); i-- > 0;) {
    const BigInt& c = num_[i];
    if (c == 0) continue;
    BigInt a = abs(c);
    os << (c < 0 ? "-" : (first ? "" : "+"));
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << 'a';
    if (i >= 2) os << '^' << i;
  }
  if (first) return "0";
  std::string s = os.str();
  if (den_ == 1) return s;
  int terms = 0;
  for (auto& c : num_) terms += c != 0;
  if (terms == 1) return s + "/" + den_.get_str();
  return "(" + s + ")/" + den_.get_str();
}

std::size_t AlgebraicNumber::hash() const {
  std::size_t h = hash_big(den_);
  for (auto& c : num_) h = hash_combine(h, hash_big(c));
  return h;
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
  std::vector<BigInt> num(num_.size());
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = num_[i] + o.num_[i];
    return AlgebraicNumber(field_, std::move(num), den_);
  }
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = num_[i] * o.den_ + o.num_[i] * den_;
  return AlgebraicNumber(field_, std::move(num), den_ * o.den_);
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const { return *this + (-o); }

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
  int n = field_->degree();
  std::vector<BigInt> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] += num_[i] * o.num_[j];
  }
  const auto& red = field_->reduction_table();
  std::vector<BigInt> num(prod.begin(), prod.begin() + n);
  for (int k = n; k <= 2 * n - 2; ++k) {
    if (prod[k] == 0) continue;
    for (int j = 0; j < n; ++j) num[j] += prod[k] * red[k - n][j];
  }
  return AlgebraicNumber(field_, std::move(num), den_ * o.den_);
}

AlgebraicNumber AlgebraicNumber::operator*(const Rational& q) const {
  std::vector<BigInt> num(num_.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = num_[i] * q.get_num();
  return AlgebraicNumber(field_, std::move(num), den_ * q.get_den());
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const { return *this * o.inverse(); }

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) fail(ErrorKind::Validation, "division by zero in Q(alpha)");
  int n = field_->degree();
  // Columns: x * alpha^j; solve for y with x * y = 1.
  RatMatrix m(n, n);
  AlgebraicNumber basis = field_->one();
  AlgebraicNumber a = field_->alpha();
  for (int j = 0; j < n; ++j) {
    AlgebraicNumber col = *this * basis;
    for (int i = 0; i < n; ++i) m(i, j) = col.coeff(i);
    basis = basis * a;
  }
  RatMatrix inv = rauzy::inverse(m);
  std::vector<Rational> y(n);
  for (int i = 0; i < n; ++i) y[i] = inv(i, 0);
  return AlgebraicNumber(field_, y);
}

AlgebraicNumber AlgebraicNumber::pow(long k) const {
  AlgebraicNumber base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  AlgebraicNumber r = field_->one();
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

NumberField::NumberField(IntPoly minpoly, long double alpha_approx) : n_(rauzy::degree(minpoly)), f_(std::move(minpoly)), alpha_ld_(alpha_approx) {
  if (n_ < 1 || f_.back() != 1) fail(ErrorKind::Validation, "minimal polynomial must be monic of degree >= 1");
  // alpha^k reduced for k = n .. 2n-2
  std::vector<BigInt> cur(n_, 0);
  for (int j = 0; j < n_; ++j) cur[j] = -f_[j];
  for (int k = n_; k <= 2 * n_ - 2; ++k) {
    reduce_.push_back(cur);
    std::vector<BigInt> next(n_, 0);
    BigInt top = cur[n_ - 1];
    for (int j = n_ - 1; j >= 1; --j) next[j] = cur[j - 1];
    for (int j = 0; j < n_; ++j) next[j] -= top * f_[j];
    cur = next;
  }
  enc_ = refine_real_root(f_, alpha_approx, 256);
  BigInt lo = enc_.lo, hi = enc_.lo + 1;
  lo_pow_.resize(n_);
  hi_pow_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    lo_pow_[i] = big_pow(lo, i) << (enc_.bits * (n_ - 1 - i));
    hi_pow_[i] = big_pow(hi, i) << (enc_.bits * (n_ - 1 - i));
  }
  alpha_inv_ = alpha().inverse();
}

AlgebraicNumber NumberField::zero() const { return AlgebraicNumber(this, std::vector<BigInt>(n_, 0)); }

AlgebraicNumber NumberField::one() const {
  std::vector<BigInt> c(n_, 0);
  c[0] = 1;
  return AlgebraicNumber(this, std::move(c));
}

AlgebraicNumber NumberField::alpha() const {
  std::vector<BigInt> c(n_, 0);
  if (n_ == 1)
    c[0] = -f_[0];
  else
    c[1] = 1;
  return AlgebraicNumber(this, std::move(c));
}

AlgebraicNumber NumberField::from_rational(const Rational& q) const {
  std::vector<BigInt> c(n_, 0);
  c[0] = q.get_num();
  return AlgebraicNumber(this, std::move(c), q.get_den());
}

AlgebraicNumber NumberField::from_ints(const std::vector<long>& coeffs, long den) const {
  std::vector<BigInt> c(n_, 0);
  for (std::size_t i = 0; i < coeffs.size() && i < c.size(); ++i) c[i] = coeffs[i];
  if (static_cast<int>(coeffs.size()) > n_) fail(ErrorKind::Validation, "too many coefficients");
  return AlgebraicNumber(this, std::move(c), den);
}

int NumberField::sign_of(const std::vector<BigInt>& num) const {
  bool zero = true;
  for (auto& c : num) zero = zero && c == 0;
  if (zero) return 0;
  if (n_ == 1) return sgn(num[0]);
  auto decide = [&](const std::vector<BigInt>& lp, const std::vector<BigInt>& hp) {
    BigInt lower = 0, upper = 0;
    for (int i = 0; i < n_; ++i) {
      if (num[i] > 0) {
        lower += num[i] * lp[i];
        upper += num[i] * hp[i];
      } else if (num[i] < 0) {
        lower += num[i] * hp[i];
        upper += num[i] * lp[i];
      }
    }
    if (lower > 0) return 1;
    if (upper < 0) return -1;
    return 0;
  };
  int s = decide(lo_pow_, hi_pow_);
  unsigned long bits = enc_.bits;
  while (s == 0) {
    bits *= 2;
    if (bits > (1ul << 22)) fail(ErrorKind::Precision, "sign undecided at maximal enclosure precision");
    DyadicEnclosure e = refine_real_root(f_, alpha_ld_, bits);
    std::vector<BigInt> lp(n_), hp(n_);
    for (int i = 0; i < n_; ++i) {
      lp[i] = big_pow(e.lo, i) << (bits * (n_ - 1 - i));
      hp[i] = big_pow(e.lo + 1, i) << (bits * (n_ - 1 - i));
    }
    s = decide(lp, hp);
  }
  return s;
}

namespace {

class ElementParser {
 public:
  ElementParser(const NumberField& k, std::string_view s) : k_(k), s_(s) {}

  AlgebraicNumber parse() {
    AlgebraicNumber r = expr();
    skip();
    if (i_ != s_.size()) error("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::Validation, "cannot parse element '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'a' || c == '(';
  }
  AlgebraicNumber expr() {
    AlgebraicNumber r = term();
    while (true) {
      if (peek('+')) {
        ++i_;
        r = r + term();
      } else if (peek('-')) {
        ++i_;
        r = r - term();
      } else {
        return r;
      }
    }
  }
  AlgebraicNumber term() {
    AlgebraicNumber r = unary();
    while (true) {
      if (peek('*')) {
        ++i_;
        r = r * unary();
      } else if (peek('/')) {
        ++i_;
        AlgebraicNumber d = unary();
        if (d.is_zero()) error("division by zero");
        r = r / d;
      } else if (starts_factor()) {
        r = r * power();
      } else {
        return r;
      }
    }
  }
  AlgebraicNumber unary() {
    if (peek('-')) {
      ++i_;
      return -unary();
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }
  AlgebraicNumber power() {
    AlgebraicNumber b = primary();
    if (peek('^')) {
      ++i_;
      bool neg = false;
      if (peek('-')) {
        neg = true;
        ++i_;
      }
      skip();
      long e = 0;
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) error("expected exponent");
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) e = e * 10 + (s_[i_++] - '0');
      if (neg && b.is_zero()) error("division by zero");
      return b.pow(neg ? -e : e);
    }
    return b;
  }
  AlgebraicNumber primary() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      AlgebraicNumber r = expr();
      if (!peek(')')) error("missing ')'");
      ++i_;
      return r;
    }
    if (c == 'a') {
      ++i_;
      return k_.alpha();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return k_.from_rational(Rational(BigInt(std::string(s_.substr(b, i_ - b)))));
    }
    error(std::string("unexpected character '") + c + "'");
  }

  const NumberField& k_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

AlgebraicNumber parse_element(const NumberField& field, std::string_view text) { return ElementParser(field, text).parse(); }

}  // namespace rauzy
