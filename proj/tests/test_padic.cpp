#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace rauzy;
using fixtures::sys;

namespace {
IntPoly poly(std::initializer_list<long> c) {
  IntPoly f;
  for (long x : c) f.emplace_back(x);
  return f;
}

bool same_padic(const PadicElement& x, const PadicElement& y) { return (x - y).is_zero_to_precision(); }
}  // namespace

TEST_CASE("primes dividing the norm") {
  CHECK(alpha_primes(poly({-3, -5, 1})) == std::vector<BigInt>{3});
  CHECK(alpha_primes(poly({-1, -1, 1})).empty());
  CHECK(alpha_primes(poly({-2, 0, -3, 1})) == std::vector<BigInt>{2});
  CHECK(alpha_primes(poly({-12, 0, 1})) == std::vector<BigInt>{2, 3});
  CHECK(prime_factors(BigInt(360)) == std::vector<BigInt>{2, 3, 5});
}

TEST_CASE("Newton polygons") {
  auto a = newton_polygon(poly({-2, 0, -3, 1}), 2);
  REQUIRE(a.segments.size() == 2);
  CHECK(a.segments[0].slope == Rational(-1, 2));
  CHECK(a.segments[0].length == 2);
  CHECK(a.segments[1].slope == 0);
  CHECK(a.segments[1].length == 1);
  CHECK(a.positive_root_count() == 2);

  auto b = newton_polygon(poly({-3, -5, 1}), 3);
  REQUIRE(b.segments.size() == 2);
  CHECK(b.segments[0].slope == -1);
  CHECK(b.segments[0].length == 1);
  CHECK(b.segments[1].slope == 0);
  CHECK(b.positive_root_count() == 1);

  CHECK(newton_polygon(poly({-1, -1, 1}), 5).positive_root_count() == 0);
}

TEST_CASE("alpha-part rings") {
  AlphaPartRing r92(poly({-2, 0, -3, 1}), 2);
  CHECK(r92.degree() == 2);
  CHECK(r92.ramification() == 2);
  CHECK(r92.inertia() == 1);
  CHECK(r92.residue_norm() == 2);
  CHECK(r92.uniformiser());
  CHECK(r92.digit_model());
  CHECK(r92.representatives() == std::vector<BigInt>{0, 1});

  AlphaPartRing r91(poly({-3, -5, 1}), 3);
  CHECK(r91.degree() == 1);
  CHECK(r91.ramification() == 1);
  CHECK(r91.inertia() == 1);
  CHECK(r91.representatives() == std::vector<BigInt>{0, 1, 2});

  AlphaPartRing rex(poly({-2, -2, 1}), 2);
  CHECK(rex.degree() == 2);
  CHECK(rex.ramification() * rex.inertia() == 2);
  CHECK(rex.ramification() == 2);

  // x^2 - 21x + 4: alpha has valuation 2 at the prime above 2
  AlphaPartRing rsq(poly({4, -21, 1}), 2);
  CHECK(rsq.degree() == 1);
  CHECK(rsq.alpha_valuation() == 2);
  CHECK_FALSE(rsq.uniformiser());
  CHECK_FALSE(rsq.digit_model());
}

TEST_CASE("property: lifted factorisation and degree count") {
  for (auto [f, p] : {std::pair{poly({-2, 0, -3, 1}), 2}, {poly({-3, -5, 1}), 3}, {poly({-2, -2, 1}), 2},
                      {poly({4, -21, 1}), 2}}) {
    AlphaPartRing r(f, p, 40);
    auto prod = poly_mul(r.factor(), r.cofactor());
    REQUIRE(prod.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(mod_pos(prod[i] - f[i], r.modulus()) == 0);
    CHECK(r.ramification() * r.inertia() == r.degree());
    CHECK(r.degree() + static_cast<int>(r.cofactor().size()) - 1 == degree(f));
    CHECK(r.degree() == r.polygon().positive_root_count());
    // g(x) = x^m + ... with all lower coefficients divisible by p: every root has positive valuation
    for (int i = 0; i < r.degree(); ++i) CHECK(mod_pos(r.factor()[i], p) == 0);
    // cofactor roots are units
    CHECK(mod_pos(r.cofactor()[0], p) != 0);
  }
}

TEST_CASE("valuations and absolute values") {
  const auto& r = sys(fixtures::kReal3);
  const auto& ring = r.space().padic(0);
  CHECK(exact_valuation(r.field().alpha(), ring) == 1);
  CHECK(exact_valuation(r.field().one(), ring) == 0);
  CHECK_FALSE(exact_valuation(r.field().zero(), ring).has_value());
  CHECK(abs_value(1, ring) == doctest::Approx(1.0 / 3));
  CHECK(abs_value(0, ring) == 1);
  CHECK(exact_valuation(r.parse_element("a/3"), ring) == 0);
  CHECK(exact_valuation(r.parse_element("1/3"), ring) == -1);

  const auto& c = sys(fixtures::kComplex2);
  const auto& ring2 = c.space().padic(0);
  CHECK(exact_valuation(c.field().alpha(), ring2) == 1);
  CHECK(exact_valuation(c.parse_element("2"), ring2) == 2);
  CHECK(abs_value(1, ring2) == doctest::Approx(0.5));
  CHECK(embed_padic(c.field().zero(), ring2).is_zero_to_precision());
}

TEST_CASE("property: embedding is a ring homomorphism and valuations are valuations") {
  std::mt19937_64 rng(17);
  for (const char* text : {fixtures::kReal3, fixtures::kComplex2, fixtures::kEx1, fixtures::kPeriod2}) {
    const auto& s = sys(text);
    for (std::size_t i = 0; i < s.space().padic_count(); ++i) {
      const auto& ring = s.space().padic(i);
      for (int t = 0; t < 100; ++t) {
        auto x = fixtures::random_element(s, rng), y = fixtures::random_element(s, rng);
        auto ex = embed_padic(x, ring), ey = embed_padic(y, ring);
        CHECK(same_padic(embed_padic(x + y, ring), ex + ey));
        CHECK(same_padic(embed_padic(x * y, ring), ex * ey));
        if (x.is_zero() || y.is_zero()) continue;
        auto vx = exact_valuation(x, ring), vy = exact_valuation(y, ring);
        REQUIRE(vx);
        REQUIRE(vy);
        CHECK(exact_valuation(x * y, ring) == *vx + *vy);
        if (!(x + y).is_zero()) CHECK(*exact_valuation(x + y, ring) >= std::min(*vx, *vy));
        // the padic element agrees with the exact valuation where determined
        if (auto v = ex.valuation()) CHECK(*v == *vx);
      }
    }
  }
}

TEST_CASE("alpha-adic digits") {
  const auto& r = sys(fixtures::kReal3);
  const auto& ring = r.space().padic(0);
  auto zero = alpha_digits(embed_padic(r.field().zero(), ring), 10);
  for (int d : zero.digits) CHECK(d == 0);
  CHECK(euclidean_model(zero, 3) == 0);

  // a/3 has valuation 0 and its digits lie in {0, 1, 2}
  auto d = alpha_digits(embed_padic(r.parse_element("a/3"), ring), 20);
  CHECK(d.first == 0);
  for (int x : d.digits) CHECK((x >= 0 && x <= 2));

  // 1 + 2a + a^3 reads back directly
  auto e = alpha_digits(embed_padic(r.parse_element("1+2a+a^3"), ring), 6);
  CHECK(e.first == 0);
  CHECK(e.digits == std::vector<int>{1, 2, 0, 1, 0, 0});
  CHECK(euclidean_model(e, 3) == doctest::Approx(1.0 / 3 + 2.0 / 9 + 1.0 / 81));

  const auto& c = sys(fixtures::kComplex2);
  auto f = alpha_digits(embed_padic(c.parse_element("1+a^2"), c.space().padic(0)), 5);
  CHECK(f.digits == std::vector<int>{1, 0, 1, 0, 0});

  const auto& sq = sys(fixtures::kPeriod2);
  CHECK_THROWS_AS(alpha_digits(embed_padic(sq.field().one(), sq.space().padic(0)), 4), Error);
}

TEST_CASE("property: alpha-adic digits reconstruct the element") {
  std::mt19937_64 rng(23);
  for (const char* text : {fixtures::kReal3, fixtures::kComplex2, fixtures::kEx1}) {
    const auto& s = sys(text);
    const auto& ring = s.space().padic(0);
    for (int t = 0; t < 50; ++t) {
      auto x = fixtures::random_element(s, rng, 20, 1);
      if (x.is_zero()) continue;
      const int count = 12;
      auto d = alpha_digits(embed_padic(x, ring), count);
      REQUIRE(d.first >= 0);
      auto sum = s.field().zero();
      auto reps = ring.representatives();
      for (int i = 0; i < count; ++i)
        sum += s.field().alpha().pow(d.first + i) * Rational(reps[d.digits[i]]);
      auto rest = embed_padic(x - sum, ring);
      auto v = rest.valuation();
      CHECK((!v || *v >= d.first + count));
    }
  }
}

TEST_CASE("property: fast ring agrees with exact embedding") {
  std::mt19937_64 rng(29);
  for (const char* text : {fixtures::kReal3, fixtures::kComplex2}) {
    const auto& s = sys(text);
    const auto& ring = s.space().padic(0);
    FastPadicRing fast(ring);
    for (int t = 0; t < 50; ++t) {
      auto x = fixtures::random_element(s, rng, 20, 1), y = fixtures::random_element(s, rng, 20, 1);
      auto fx = fast.from(embed_padic(x, ring), 0), fy = fast.from(embed_padic(y, ring), 0);
      auto sum = fast.from(embed_padic(x + y, ring), 0);
      auto ax = fast.from(embed_padic(s.field().alpha() * x, ring), 0);
      auto diff = fast.sub(fast.add(fx, fy), sum);
      CHECK(fast.is_zero(diff));
      CHECK(fast.is_zero(fast.sub(fast.mul_alpha(fx), ax)));
      auto v = exact_valuation(x, ring);
      if (v && *v < fast.digits_precision()) CHECK(fast.valuation(fx, 1000) == *v);
    }
  }
}
