#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <random>

#include "rauzy/error.hpp"
#include "rauzy/system.hpp"

namespace fixtures {

constexpr const char* kEx1 = "1->121;2->11";
constexpr const char* kReal3 = "1->1^5 2;2->1^3";      // R x Q_3
constexpr const char* kComplex2 = "1->1113;2->11;3->2";  // C x Q_2(sqrt 7)
constexpr const char* kPeriod2 = "1->2121^3;2->12";      // seed of period 2
constexpr const char* kFibonacci = "1->12;2->1";
constexpr const char* kTribonacciLike = "1->12;2->3;3->1";

inline const rauzy::System& sys(const char* text) {
  static std::map<std::string, std::unique_ptr<rauzy::System>> cache;
  auto& slot = cache[text];
  if (!slot) slot = rauzy::System::parse(text);
  return *slot;
}

// Random element of Q(a) with small numerators over the given denominator.
inline rauzy::AlgebraicNumber random_element(const rauzy::System& s, std::mt19937_64& rng, long range = 20,
                                             long den = 12) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<long> c(s.size());
  for (auto& x : c) x = d(rng);
  return s.field().from_ints(c, den);
}

// Random element of V * Z[1/a] in [0, delta(a)), built as alpha^-L times a
// random integral v-combination reduced into range by the numeration map.
inline rauzy::AlgebraicNumber random_fraction(const rauzy::System& s, std::mt19937_64& rng, rauzy::Letter a) {
  std::uniform_int_distribution<long> d(-30, 30);
  std::uniform_int_distribution<int> l(0, 4);
  for (;;) {
    std::vector<rauzy::Rational> c(s.size());
    for (auto& x : c) x = d(rng);
    auto x = s.eigen().from_v_coordinates(c) * s.field().alpha_inverse().pow(l(rng));
    if (s.in_range(x, a)) return x;
    // fold into [0, delta(a)) using the fractional part of the real value
    long double q = x.approx() / s.delta_letter(a).approx();
    auto shifted = x - s.delta_letter(a) * rauzy::Rational(static_cast<long>(std::floor(q)));
    if (s.in_range(shifted, a)) return shifted;
  }
}

}  // namespace fixtures
