#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/polynomial.hpp"

namespace rauzy {

class NumberField;

// Element of Q(alpha) in the power basis, stored as integer numerators over a
// common positive denominator in lowest terms. Holds a non-owning pointer to
// its field, which must outlive it.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(const NumberField* field, std::vector<BigInt> num, BigInt den = 1);
  AlgebraicNumber(const NumberField* field, const std::vector<Rational>& coeffs);

  const NumberField* field() const { return field_; }
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }
  std::vector<Rational> coeffs() const;
  Rational coeff(int i) const { return Rational(num_[i], den_); }

  bool is_zero() const;
  int sign() const;
  long double approx() const;  // value at the dominant root
  std::string to_string() const;
  std::size_t hash() const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber operator+(const AlgebraicNumber& o) const;
  AlgebraicNumber operator-(const AlgebraicNumber& o) const;
  AlgebraicNumber operator*(const AlgebraicNumber& o) const;
  AlgebraicNumber operator/(const AlgebraicNumber& o) const;
  AlgebraicNumber operator*(const Rational& q) const;
  AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
  bool operator==(const AlgebraicNumber& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }
  bool operator<(const AlgebraicNumber& o) const { return (*this - o).sign() < 0; }

  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(long k) const;

 private:
  void normalize();

  const NumberField* field_ = nullptr;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

struct AlgebraicNumberHash {
  std::size_t operator()(const AlgebraicNumber& x) const { return x.hash(); }
};

// Q(alpha) for a monic irreducible Pisot polynomial; alpha is the dominant real
// root, enclosed in a dyadic interval used by exact sign decisions.
class NumberField {
 public:
  explicit NumberField(IntPoly minpoly, long double alpha_approx);
  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

  int degree() const { return n_; }
  const IntPoly& minpoly() const { return f_; }

  AlgebraicNumber zero() const;
  AlgebraicNumber one() const;
  AlgebraicNumber alpha() const;
  AlgebraicNumber alpha_inverse() const { return alpha_inv_; }
  AlgebraicNumber from_rational(const Rational& q) const;
  AlgebraicNumber from_ints(const std::vector<long>& coeffs, long den = 1) const;

  // Sign of sum num_i alpha^i, refining the enclosure locally until decided.
  int sign_of(const std::vector<BigInt>& num) const;
  long double alpha_approx() const { return alpha_ld_; }
  const DyadicEnclosure& alpha_enclosure() const { return enc_; }

  // x^k for n <= k <= 2n-2 in the power basis (integral since f is monic).
  const std::vector<std::vector<BigInt>>& reduction_table() const { return reduce_; }

 private:
  int n_;
  IntPoly f_;
  long double alpha_ld_;
  DyadicEnclosure enc_;
  std::vector<BigInt> lo_pow_, hi_pow_;
  std::vector<std::vector<BigInt>> reduce_;
  AlgebraicNumber alpha_inv_;
};

// Parses expressions over Q(alpha): integers, `a` (alpha), + - * / ^ and
// parentheses; juxtaposition multiplies ("3a^2", "(1+a)/2").
AlgebraicNumber parse_element(const NumberField& field, std::string_view text);

}  // namespace rauzy

template <>
struct std::hash<rauzy::AlgebraicNumber> {
  std::size_t operator()(const rauzy::AlgebraicNumber& x) const { return x.hash(); }
};
