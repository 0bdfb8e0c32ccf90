#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "fixtures.hpp"
#include "rauzy/analysis.hpp"

using namespace rauzy;
using fixtures::sys;

namespace {
AlgebraicNumber el(const System& s, const char* text) { return s.parse_element(text); }

std::set<std::pair<std::string, Letter>> face_set(const std::vector<Face>& v) {
  std::set<std::pair<std::string, Letter>> out;
  for (auto& f : v) out.insert({f.x.to_string(), f.letter});
  return out;
}

long double radius_of(const System& s) { return bound_M(s.space(), s.digits()); }

// max over places of the place distance between Phi'(x) and Phi'(y)
long double distance(const System& s, const AlgebraicNumber& x, const AlgebraicNumber& y) {
  return norm(phi_prime(x - y, s.space()), s.space());
}
}  // namespace

TEST_CASE("tiny balls contain only the origin faces") {
  for (const char* text : {fixtures::kEx1, fixtures::kReal3, fixtures::kComplex2}) {
    const auto& s = sys(text);
    auto ball = gamma_in_ball(s, 1e-3L);
    CHECK(ball.faces.size() == static_cast<std::size_t>(s.size()));
    for (auto& f : ball.faces) CHECK(f.x.is_zero());
  }
}

TEST_CASE("property: ball faces re-verify exactly") {
  for (const char* text : {fixtures::kEx1, fixtures::kReal3, fixtures::kComplex2, fixtures::kPeriod2}) {
    const auto& s = sys(text);
    long double r = radius_of(s);
    auto ball = gamma_in_ball(s, r);
    CHECK(face_set(ball.faces).size() == ball.faces.size());
    for (auto& f : ball.faces) {
      CHECK(frac_membership(s, f.x, f.letter));
      CHECK(norm(phi_prime(f.x, s.space()), s.space()) <= r * (1 + 1e-9L));
    }
  }
}

TEST_CASE("property: ball enumeration is complete against a bounded brute force") {
  for (const char* text : {fixtures::kEx1, fixtures::kReal3}) {
    const auto& s = sys(text);
    long double r = radius_of(s);
    auto got = face_set(gamma_in_ball(s, r).faces);
    std::size_t hits = 0;
    for (int l = 0; l <= 4; ++l) {
      auto scale = s.field().alpha().pow(-l);
      for (long c1 = -40; c1 <= 40; ++c1)
        for (long c2 = -40; c2 <= 40; ++c2) {
          auto x = s.eigen().from_v_coordinates({Rational(c1), Rational(c2)}) * scale;
          if (x.sign() < 0) continue;
          for (Letter a = 1; a <= 2; ++a) {
            if (!s.in_range(x, a)) continue;
            if (norm(phi_prime(x, s.space()), s.space()) > r * (1 - 1e-9L)) continue;
            ++hits;
            CHECK(got.count({x.to_string(), a}) == 1);
          }
        }
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("zero-expansion graphs") {
  const auto& r = sys(fixtures::kReal3);
  auto gr = zero_expansion_graph(r);
  CHECK(gr.nodes.size() == 1);
  CHECK(check_property_F(r, gr).holds);

  const auto& c = sys(fixtures::kComplex2);
  auto gc = zero_expansion_graph(c);
  for (auto& n : gc.nodes) CHECK(n.x.is_zero());
  CHECK(check_property_F(c, gc).holds);

  const auto& e = sys(fixtures::kEx1);
  auto ge = zero_expansion_graph(e);
  CHECK(face_set(ge.nodes) == face_set({{e.field().zero(), 1}, {el(e, "(a-2)/2"), 1}, {el(e, "1"), 1}}));
  auto ve = check_property_F(e, ge);
  CHECK_FALSE(ve.holds);
  CHECK(ve.conclusive);
  CHECK(face_set(ve.witnesses) == face_set({{el(e, "(a-2)/2"), 1}, {el(e, "1"), 1}}));
  // 1 at letter 1 expands as .(delta(12) 0)^w
  auto x1 = expand(e, el(e, "1"), 1);
  CHECK(x1.kind == ExpansionKind::EventuallyPeriodic);
  CHECK(x1.to_string(e) == ".(δ(12)0)^ω");

  for (const char* text : {fixtures::kFibonacci, fixtures::kTribonacciLike}) {
    const auto& u = sys(text);
    CHECK(check_property_F(u, zero_expansion_graph(u)).holds);
  }
}

TEST_CASE("property: graph edges are exactly the inverse-map relations among nodes") {
  for (const char* text : {fixtures::kEx1, fixtures::kComplex2, fixtures::kPeriod2}) {
    const auto& s = sys(text);
    auto g = zero_expansion_graph(s);
    CHECK(g.untrimmed_nodes >= g.nodes.size());
    auto nodes = face_set(g.nodes);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      CHECK_FALSE(g.adjacency[i].empty());
      auto img = face_set(t_ext_inverse(s, g.nodes[i]));
      std::set<std::pair<std::string, Letter>> targets;
      for (auto j : g.adjacency[i]) targets.insert({g.nodes[j].x.to_string(), g.nodes[j].letter});
      std::set<std::pair<std::string, Letter>> want;
      for (auto& f : img)
        if (nodes.count(f)) want.insert(f);
      CHECK(targets == want);
    }
  }
}

TEST_CASE("property: every node lies near the origin of its translated subtile") {
  // 0 in R(a) + gamma: some level-k point p satisfies |p + gamma| <= M rho^k
  // the working substitution of kPeriod2 grows by ~21 per level
  for (auto [text, k0, k1] : {std::tuple{fixtures::kEx1, 4, 7}, {fixtures::kPeriod2, 2, 4}}) {
    const auto& s = sys(text);
    auto g = zero_expansion_graph(s);
    long double rho = norm(phi_prime(s.field().alpha(), s.space()), s.space());
    long double prev = 1e300L;
    for (int k : {k0, k1}) {
      long double worst = 0;
      for (auto& n : g.nodes) {
        auto cloud = subtile_cloud(s, n.letter, k);
        long double best = 1e300L;
        for (std::size_t i = 0; i < cloud.points.size(); ++i)
          best = std::min(best, distance(s, cloud.points.value(s.eigen(), i), -n.x));
        CHECK(best <= radius_of(s) * std::pow(rho, static_cast<long double>(k)) * (1 + 1e-9L));
        worst = std::max(worst, best);
      }
      CHECK(worst <= prev);
      prev = worst;
    }
  }
}

TEST_CASE("property: property F implies finite expansions of ball faces") {
  std::mt19937_64 rng(71);
  for (const char* text : {fixtures::kReal3, fixtures::kComplex2, fixtures::kFibonacci}) {
    const auto& s = sys(text);
    REQUIRE(check_property_F(s, zero_expansion_graph(s)).holds);
    auto ball = gamma_in_ball(s, radius_of(s));
    for (int t = 0; t < 100; ++t) {
      auto& f = ball.faces[rng() % ball.faces.size()];
      auto d = finite_expansion(s, f.x, f.letter, 40);
      REQUIRE(d.has_value());
      auto sum = s.field().zero(), ap = s.field().alpha_inverse();
      for (auto e : *d) {
        sum += s.edge_delta(e) * ap;
        ap = ap * s.field().alpha_inverse();
      }
      CHECK(sum == f.x);
    }
  }
}

TEST_CASE("failure of property F is witnessed by an infinite expansion") {
  const auto& e = sys(fixtures::kEx1);
  auto v = check_property_F(e, zero_expansion_graph(e));
  REQUIRE_FALSE(v.infinite_expansion.empty());
  for (auto& f : v.infinite_expansion) {
    CHECK(frac_membership(e, f.x, f.letter));
    CHECK(expand(e, f.x, f.letter).kind == ExpansionKind::EventuallyPeriodic);
  }
}

TEST_CASE("property: U-iterates are nested and stay in Gamma") {
  for (auto [text, m] : {std::pair{fixtures::kEx1, 6}, {fixtures::kReal3, 5}, {fixtures::kComplex2, 6},
                         {fixtures::kPeriod2, 3}}) {
    const auto& s = sys(text);
    auto it = u_iterates(s, m);
    REQUIRE(it.size() == static_cast<std::size_t>(m + 1));
    CHECK(face_set(it[0]).size() == static_cast<std::size_t>(s.size()));
    for (std::size_t k = 0; k + 1 < it.size(); ++k) {
      auto a = face_set(it[k]), b = face_set(it[k + 1]);
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
      CHECK(face_set(t_ext_inverse(s, it[k])) == b);
    }
    for (auto& f : it.back()) CHECK(frac_membership(s, f.x, f.letter));
  }
}

TEST_CASE("property: tile bounds contain the clouds") {
  for (const char* text : {fixtures::kEx1, fixtures::kReal3, fixtures::kComplex2}) {
    const auto& s = sys(text);
    auto b = tile_bounds(s);
    CloudEmbedder emb(s.space(), s.eigen());
    std::vector<long double> row(emb.columns());
    for (Letter a = 1; a <= s.size(); ++a) {
      auto c = subtile_cloud(s, a, 7);
      for (std::size_t i = 0; i < c.points.size(); ++i) {
        emb.arch(c.points.point(i), row.data());
        int col = 0, real = 0;
        for (std::size_t p = 0; p < s.space().arch().size(); ++p) {
          if (s.space().arch()[p].is_complex) {
            CHECK(std::hypot(row[col], row[col + 1]) <= b.radius[a - 1][p] * (1 + 1e-9L));
            col += 2;
          } else {
            auto [lo, hi] = b.real[a - 1][real++];
            CHECK(row[col] >= lo - 1e-9L);
            CHECK(row[col] <= hi + 1e-9L);
            ++col;
          }
        }
      }
    }
  }
}

TEST_CASE("covering degree") {
  const auto& r = sys(fixtures::kReal3);
  CoveringOptions o;
  o.samples = 400;
  o.level = 8;
  o.check_level = 14;
  o.threads = 2;
  auto a = covering_degree_estimate(r, o);
  CHECK(a.samples == 400);
  CHECK(a.uncovered == 0);
  CHECK(a.min_degree >= 1);
  CHECK(a.modal_degree == 1);
  // a disjoint window gives the same modal degree
  o.center = {5.0L};
  o.seed = 2;
  auto b = covering_degree_estimate(r, o);
  CHECK(b.modal_degree == a.modal_degree);
  CHECK(b.min_degree >= 1);
  // results do not depend on the thread count
  o.threads = 1;
  auto c = covering_degree_estimate(r, o);
  CHECK(c.histogram == b.histogram);
  CHECK(c.ambiguous == b.ambiguous);

  CoveringOptions sq;
  sq.samples = 10;
  CHECK_THROWS_AS(covering_degree_estimate(sys(fixtures::kPeriod2), sq), Error);
}
