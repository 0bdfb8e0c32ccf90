#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rauzy/numberfield.hpp"

namespace rauzy {

struct NewtonSegment {
  int start;       // abscissa of the left end
  int length;
  Rational slope;  // change in valuation per unit step
};

struct NewtonPolygon {
  BigInt p;
  std::vector<NewtonSegment> segments;
  // Number of roots of positive valuation (sum of lengths of negative slopes).
  int positive_root_count() const;
};

NewtonPolygon newton_polygon(const IntPoly& f, const BigInt& p);
std::vector<BigInt> prime_factors(const BigInt& n);
std::vector<BigInt> alpha_primes(const IntPoly& f);

// Z_p[x]/(g) where g is the factor of f over Z_p collecting the roots of
// positive valuation, lifted to precision p^N. Only a single prime above p
// with (f mod p)-regular Newton data is supported.
class AlphaPartRing {
 public:
  AlphaPartRing(const IntPoly& f, const BigInt& p, int precision = 64);

  const IntPoly& minpoly() const { return f_; }
  const BigInt& prime() const { return p_; }
  int precision() const { return n_prec_; }
  const BigInt& modulus() const { return mod_; }
  int degree() const { return static_cast<int>(g_.size()) - 1; }
  const std::vector<BigInt>& factor() const { return g_; }      // monic, low to high
  const std::vector<BigInt>& cofactor() const { return h_; }
  const NewtonPolygon& polygon() const { return polygon_; }
  int ramification() const { return e_; }
  int inertia() const { return f_deg_; }
  BigInt residue_norm() const { return big_pow(p_, f_deg_); }
  int alpha_valuation() const { return alpha_val_; }
  bool uniformiser() const { return alpha_val_ == 1; }
  // alpha-adic digits with representatives 0..p-1 (alpha uniformiser, f = 1).
  bool digit_model() const { return uniformiser() && f_deg_ == 1; }
  bool index_unverified() const { return index_unverified_; }
  std::vector<BigInt> representatives() const;
  std::string describe() const;

  AlphaPartRing with_precision(int n) const { return AlphaPartRing(f_, p_, n); }

  // Remainder of a polynomial modulo g, coefficients reduced mod p^N.
  std::vector<BigInt> reduce(const std::vector<BigInt>& poly) const;
  std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const;
  // p-adic valuation of the determinant of multiplication by u, or nullopt if 0 mod p^N.
  std::optional<int> norm_valuation(const std::vector<BigInt>& u) const;

 private:
  IntPoly f_;
  BigInt p_;
  int n_prec_;
  BigInt mod_;
  std::vector<BigInt> g_, h_;
  NewtonPolygon polygon_;
  int e_ = 1, f_deg_ = 1, alpha_val_ = 1;
  bool index_unverified_ = false;
};

// value = p^shift * sum u_j alpha^j, known modulo p^(shift + N).
class PadicElement {
 public:
  PadicElement() = default;
  PadicElement(const AlphaPartRing* ring, int shift, std::vector<BigInt> u);

  const AlphaPartRing* ring() const { return ring_; }
  int shift() const { return shift_; }
  const std::vector<BigInt>& coefficients() const { return u_; }
  bool is_zero_to_precision() const;
  // v_P normalised so that a uniformiser has valuation 1; nullopt if indeterminate.
  std::optional<int> valuation() const;
  // Absolute precision in v_P units.
  int precision_valuation() const;

  PadicElement operator+(const PadicElement& o) const;
  PadicElement operator-() const;
  PadicElement operator-(const PadicElement& o) const { return *this + (-o); }
  PadicElement operator*(const PadicElement& o) const;
  PadicElement scale(const BigInt& c) const;

 private:
  const AlphaPartRing* ring_ = nullptr;
  int shift_ = 0;
  std::vector<BigInt> u_;
};

PadicElement embed_padic(const AlgebraicNumber& x, const AlphaPartRing& ring);
// Exact valuation of an algebraic number, escalating precision x2 up to four
// times; nullopt for zero. Throws Precision when undetermined.
std::optional<int> exact_valuation(const AlgebraicNumber& x, const AlphaPartRing& ring);
long double abs_value(int valuation, const AlphaPartRing& ring);

struct AlphaDigits {
  int first = 0;            // z = sum_{i >= first} d_i alpha^i
  std::vector<int> digits;  // indices into the representative set
};

// Requires ring.digit_model(); throws Unsupported otherwise.
AlphaDigits alpha_digits(const PadicElement& z, int count);
long double euclidean_model(const AlphaDigits& d, long double residue_norm);
// Fallback model: interleaved p-adic digits of the coefficients.
long double coefficient_model(const PadicElement& z, int digits);

// Word-sized arithmetic in Z_p[alpha] = O_P for digit-model rings, modulo p^K
// with p^K < 2^62. Used by the point-cloud and covering hot paths.
class FastPadicRing {
 public:
  static constexpr int kMaxDegree = 8;
  struct Elem {
    std::uint64_t c[kMaxDegree] = {};
  };

  explicit FastPadicRing(const AlphaPartRing& ring);

  int degree() const { return m_; }
  std::uint64_t prime() const { return p_; }
  int digits_precision() const { return k_; }
  std::uint64_t modulus() const { return mod_; }

  Elem from(const PadicElement& z, int alpha_shift) const;  // alpha^alpha_shift * z, must be integral
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, std::int64_t k) const;
  bool is_zero(const Elem& a) const;
  // Valuation in alpha-units, capped at `cap`.
  int valuation(const Elem& a, int cap) const;
  // (a - d) / alpha where d = a_0 mod p is returned through `digit`.
  Elem shift_digit(const Elem& a, std::uint64_t* digit) const;
  // a / alpha; requires a_0 divisible by p.
  Elem div_alpha(const Elem& a) const;
  Elem mul_alpha(const Elem& a) const;
  Elem from_digit(std::uint64_t d) const;
  // Euclidean model of alpha^(-offset) * a using `count` digits.
  long double model(const Elem& a, int offset, int count) const;

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod_);
  }
  int m_;
  std::uint64_t p_, mod_;
  int k_;
  std::uint64_t g_[kMaxDegree + 1] = {};
  std::uint64_t winv_ = 0;  // inverse of g_0 / p
};

}  // namespace rauzy
