#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rauzy/bigint.hpp"
#include "rauzy/matrix.hpp"

namespace rauzy {

// Coefficients from the constant term upwards; no trailing zeros.
using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rational>;
using Complex = std::complex<long double>;

void trim(IntPoly& f);
void trim(RatPoly& f);
int degree(const IntPoly& f);
IntPoly derivative(const IntPoly& f);
BigInt eval(const IntPoly& f, const BigInt& x);
Rational eval(const IntPoly& f, const Rational& x);
Complex eval(const IntPoly& f, const Complex& z);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact division over Z; returns false if b does not divide a.
bool poly_divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);
std::string poly_to_string(const IntPoly& f, const std::string& var = "x");

// det(xI - M), Faddeev-LeVerrier over the integers.
IntPoly char_poly(const IntMatrix& m);

// Monic input of degree <= 8: rational roots, then Kronecker factor search
// with the Mignotte bound as a filter.
bool is_irreducible_over_Q(const IntPoly& f);

// Aberth iteration followed by Newton polishing.
std::vector<Complex> complex_roots(const IntPoly& f);

struct RootDisc {
  Complex center;
  long double radius;
};

// Inclusion discs of radius n|W_i| around approximations; each disjoint disc holds one root.
std::vector<RootDisc> root_discs(const IntPoly& f, const std::vector<Complex>& approx);

struct PisotVerdict {
  bool pisot = false;
  bool unit = false;
  std::string reason;
  Complex dominant;
  std::vector<RootDisc> discs;  // dominant root first
};

PisotVerdict is_pisot(const IntPoly& f);

// Dyadic isolating interval [lo, lo + 2^-bits] of the unique real root in (low_bound, inf)
// having a sign change; returns lo scaled by 2^bits.
struct DyadicEnclosure {
  BigInt lo;  // alpha in [lo / 2^bits, (lo+1) / 2^bits]
  unsigned long bits;
};

DyadicEnclosure refine_real_root(const IntPoly& f, long double approx, unsigned long bits);

}  // namespace rauzy
