// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "rauzy/analysis.hpp"

using namespace rauzy;
using fixtures::sys;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

AlgebraicNumber el(const System& s, const char* text) { return s.parse_element(text); }

std::set<std::pair<std::string, Letter>> face_set(const std::vector<Face>& v) {
  std::set<std::pair<std::string, Letter>> out;
  for (auto& f : v) out.insert({f.x.to_string(), f.letter});
  return out;
}

std::set<std::vector<std::int64_t>> rows(const PointSet& p) {
  std::set<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.insert({p.point(i), p.point(i) + p.dim});
  return out;
}

bool check_expansion(const System& s, const char* x, Letter a, const char* want, ExpansionKind kind, int pre,
                     int per, Outcome& o) {
  auto e = expand(s, el(s, x), a);
  bool ok = e.to_string(s) == want && e.kind == kind && e.preperiod == pre && e.period == per;
  o.detail << "(" << x << ")_" << a << " = " << e.to_string(s) << " [" << kind_name(e.kind) << ", pre "
           << e.preperiod << ", per " << e.period << "]; ";
  o.require(ok, std::string("expansion of ") + x);
  return ok;
}

Outcome criterion1() {
  Outcome o;
  const auto& s = sys(fixtures::kEx1);
  check_expansion(s, "1/4", 1, ".0δ(1)δ(1)", ExpansionKind::Finite, 3, 1, o);
  // the orbit reaches (0, 1) and stays there with digit 0
  State st{el(s, "1/4"), 1};
  std::vector<AlgebraicNumber> digits;
  for (int i = 0; i < 10; ++i) {
    auto t = t_sigma(s, st);
    digits.push_back(s.edge_delta(t.edge));
    st = t.next;
  }
  o.require(digits[0].is_zero() && digits[1] == el(s, "a/2") && digits[2] == el(s, "a/2"), "first three digits");
  o.require(std::all_of(digits.begin() + 3, digits.end(), [](auto& d) { return d.is_zero(); }), "zero tail");
  o.require(st == State{s.field().zero(), 1}, "orbit ends at (0, 1)");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto& s = sys(fixtures::kEx1);
  check_expansion(s, "(a-1)/3", 2, ".(δ(1)0)^ω", ExpansionKind::EventuallyPeriodic, 0, 2, o);
  check_expansion(s, "a-2", 1, ".δ(1)δ(1)(0δ(12))^ω", ExpansionKind::EventuallyPeriodic, 2, 2, o);
  check_expansion(s, "(a-1)/4", 1, ".0δ(12)δ(12)", ExpansionKind::Finite, 3, 1, o);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& s = sys(fixtures::kEx1);
  auto x = el(s, "3a/2+1");
  auto in_level = [&](Letter a, int k) {
    for (auto& p : sigma_integer_level(s, a, k))
      if (p.value == x) return true;
    return false;
  };
  bool i1 = is_sigma_integer(s, x, 1), i2 = is_sigma_integer(s, x, 2);
  bool l2 = in_level(2, 2), l3 = in_level(2, 3);
  o.detail << "(sigma,1)-integer " << i1 << ", (sigma,2)-integer " << i2 << ", in Z^(2)_2 " << l2 << ", in Z^(3)_2 "
           << l3;
  o.require(i1 && !i2, "integer classification");
  o.require(l2 && !l3, "level membership");
  o.require(in_sigma_integer_level(s, x, 2, 2) && !in_sigma_integer_level(s, x, 2, 3), "orbit-based level test");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& s = sys(fixtures::kReal3);
  o.detail << "char poly " << poly_to_string(char_poly(s.matrix())) << "; ";
  o.require(poly_to_string(char_poly(s.matrix())) == "x^2 - 5x - 3", "characteristic polynomial");
  o.require(s.space().padic_count() == 1, "one 3-adic place");
  if (s.space().padic_count() == 1) {
    const auto& r = s.space().padic(0);
    auto v = exact_valuation(s.field().alpha(), r);
    long double abs = v ? abs_value(*v, r) : -1;
    o.detail << "e=" << r.ramification() << " f=" << r.inertia() << " N=" << r.residue_norm().get_str()
             << " |a|=" << static_cast<double>(abs) << "; ";
    o.require(r.prime() == 3 && r.ramification() == 1 && r.inertia() == 1 && r.residue_norm() == 3, "local data");
    o.require(v && *v == 1 && std::abs(abs - 1.0L / 3) < 1e-15L, "|alpha|_p = 1/3");
  }
  std::vector<AlgebraicNumber> want;
  for (const char* d : {"0", "a/3", "2a/3", "a", "4a/3", "5a/3"}) want.push_back(el(s, d));
  o.require(s.digits().values == want, "digit set");
  o.detail << s.digits().values.size() << " digits; ";
  auto g1 = gifs_decomposition(s, 1), g2 = gifs_decomposition(s, 2);
  o.detail << "GIFS terms " << g1.size() << " and " << g2.size();
  o.require(g1.size() == 8, "8 terms for letter 1");
  o.require(g2.size() == 1 && g2[0].from == 1 && g2[0].digit == s.eigen().delta(Word(5, 1)), "letter 2 term");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& s = sys(fixtures::kReal3);
  // first 3-adic level: v_p(x) >= 0, real coordinate within the plotted stripe
  GammaWindow w;
  w.arch_box = {{-3.5L, 3.5L}};
  w.arch_radius = {3.5L};
  w.min_valuation = {0};
  auto faces = gamma_query(s, w);
  std::set<std::string> got;
  for (auto& f : faces) got.insert(f.x.to_string());
  std::vector<const char*> seven = {"2a/3-3", "2a/3-2", "a/3-1", "0", "1", "2-a/3", "3-a/3"};
  std::set<std::string> want;
  for (auto x : seven) want.insert(el(s, x).to_string());
  o.detail << got.size() << " x values";
  o.require(got == want, "window query returns the seven values");
  std::set<std::string> two, below_one;
  for (auto x : seven) {
    auto v = el(s, x);
    bool member = false;
    for (Letter a = 1; a <= 2; ++a) member = member || frac_membership(s, v, a);
    o.require(member, std::string("frac membership of ") + x);
    if (x_tile(s, v).letters.size() == 2) two.insert(x);
    if (v < s.field().one()) below_one.insert(x);
  }
  o.detail << "; two-subtile x-tiles:";
  for (auto& x : two) o.detail << " " << x;
  o.require(two == below_one && two.size() == 4, "two-subtile tiles are the four values below 1");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto& s = sys(fixtures::kComplex2);
  auto f = char_poly(s.matrix());
  o.detail << "char poly " << poly_to_string(f) << "; ";
  o.require(poly_to_string(f) == "x^3 - 3x^2 - 2" && is_irreducible_over_Q(f), "irreducible x^3-3x^2-2");
  auto np = newton_polygon(f, 2);
  bool slopes = np.segments.size() == 2 && np.segments[0].slope == Rational(-1, 2) && np.segments[0].length == 2 &&
                np.segments[1].slope == 0 && np.segments[1].length == 1;
  o.require(slopes, "Newton polygon");
  o.require(s.space().padic_count() == 1, "one 2-adic place");
  if (s.space().padic_count() == 1) {
    const auto& r = s.space().padic(0);
    o.detail << "factor degree " << r.degree() << " e=" << r.ramification() << " f=" << r.inertia() << "; ";
    o.require(r.degree() == 2 && r.ramification() == 2 && r.inertia() == 1, "ramified quadratic factor");
  }
  o.require(s.space().arch().size() == 1 && s.space().arch()[0].is_complex, "one complex place");
  o.detail << "layout " << s.space().layout() << "; ";
  std::vector<AlgebraicNumber> want;
  for (const char* d : {"0", "a^2/2", "a^2", "3a^2/2"}) want.push_back(el(s, d));
  o.require(s.digits().values == want, "digit set");
  std::size_t checked = 0;
  for (auto& d : s.digits().values) {
    auto v = exact_valuation(d, s.space().padic(0));
    o.require(!v || *v >= s.d_p()[0], "digit valuation");
    ++checked;
  }
  for (Letter a = 1; a <= 3; ++a) {
    auto c = subtile_cloud(s, a, 6);
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      auto v = exact_valuation(c.points.value(s.eigen(), i), s.space().padic(0));
      o.require(!v || *v >= s.d_p()[0], "tile point valuation");
      ++checked;
    }
  }
  o.detail << checked << " digits and level-6 tile points with v >= d_P = " << s.d_p()[0];
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (const char* text : {fixtures::kReal3, fixtures::kPeriod2}) {
    const auto& s = sys(text);
    auto graph = zero_expansion_graph(s);
    auto verdict = check_property_F(s, graph);
    auto ball = gamma_in_ball(s, bound_M(s.space(), s.digits()));
    int finite = 0;
    for (int t = 0; t < 100; ++t) {
      auto& f = ball.faces[rng() % ball.faces.size()];
      auto d = finite_expansion(s, f.x, f.letter, 40);
      if (!d) continue;
      auto sum = s.field().zero(), ap = s.field().alpha_inverse();
      for (auto e : *d) {
        sum += s.edge_delta(e) * ap;
        ap = ap * s.field().alpha_inverse();
      }
      if (sum == f.x) ++finite;
    }
    o.detail << text << ": F " << (verdict.holds ? "holds" : "fails") << ", " << finite << "/100 finite";
    if (!verdict.holds) {
      o.detail << ", witnesses";
      for (auto& w : verdict.witnesses) o.detail << " " << w.x.to_string() << "@" << w.letter;
    }
    o.detail << "; ";
    o.require(verdict.holds, std::string("property F for ") + text);
    o.require(finite == 100, std::string("finite expansions for ") + text);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* text : {fixtures::kEx1, fixtures::kReal3, fixtures::kComplex2, fixtures::kPeriod2}) {
    auto c = contraction_certificate(sys(text).space());
    o.detail << text << " deviation " << static_cast<double>(c.deviation) << "; ";
    o.require(c.deviation < 1e-9L, text);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(99);
  // (a) alpha^m T^-m(x, a) = x + alpha^m T^-m(0, a)
  int shifted = 0;
  for (const char* text : {fixtures::kEx1, fixtures::kReal3}) {
    const auto& s = sys(text);
    for (int t = 0; t < 100; ++t) {
      Letter a = 1 + static_cast<int>(rng() % s.size());
      State st{fixtures::random_fraction(s, rng, a), a};
      int m = 1 + t % 5;
      std::vector<State> lhs{st}, rhs{{s.field().zero(), a}};
      for (int i = 0; i < m; ++i) {
        lhs = t_ext_inverse(s, lhs);
        rhs = t_ext_inverse(s, rhs);
      }
      auto am = s.field().alpha().pow(m);
      for (auto& u : lhs) u.x = u.x * am;
      for (auto& u : rhs) u.x = st.x + u.x * am;
      bool ok = face_set(lhs) == face_set(rhs);
      o.require(ok, "(a) translated preimage identity");
      shifted += ok;
    }
  }
  o.detail << "(a) " << shifted << "/200; ";
  // (b) GIFS exactness and (c) walk counts
  int gifs = 0, walks = 0;
  for (const char* text : {fixtures::kEx1, fixtures::kReal3, fixtures::kComplex2}) {
    const auto& s = sys(text);
    std::vector<TileApproximation> prev;
    for (Letter b = 1; b <= s.size(); ++b) prev.push_back(subtile_cloud(s, b, 0));
    for (int k = 1; k <= 8; ++k) {
      std::vector<TileApproximation> cur;
      for (Letter a = 1; a <= s.size(); ++a) {
        cur.push_back(subtile_cloud(s, a, k));
        bool ok = rows(gifs_apply(s, a, prev)) == rows(cur.back().points);
        o.require(ok, "(b) GIFS level " + std::to_string(k));
        gifs += ok;
        auto mk = s.matrix().pow(k);
        std::uint64_t want = 0;
        for (int b = 0; b < s.size(); ++b) want += mk(a - 1, b);
        bool wc = cur.back().walk_count == want;
        o.require(wc, "(c) walk count level " + std::to_string(k));
        walks += wc;
      }
      prev = std::move(cur);
    }
  }
  o.detail << "(b) " << gifs << "/56 (c) " << walks << "/56; ";
  // (d) E1* conjugacy
  int conj = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto& s = sys(t % 2 ? fixtures::kComplex2 : fixtures::kReal3);
    int n = s.size();
    LatticeFace f{std::vector<Rational>(n), 1 + static_cast<int>(rng() % n)};
    for (auto& q : f.x) q = Rational(static_cast<long>(rng() % 81) - 40, 1 + static_cast<long>(rng() % 3));
    std::vector<Face> mapped;
    for (auto& g : e1_star(s, f)) mapped.push_back(lattice_to_face(s, g));
    bool ok = face_set(mapped) == face_set(t_ext_inverse(s, lattice_to_face(s, f)));
    o.require(ok, "(d) conjugacy");
    conj += ok;
  }
  o.detail << "(d) " << conj << "/1000; ";
  // (e) adic successor commutes with the shift
  int succ = 0;
  for (const char* text : {fixtures::kEx1, fixtures::kReal3}) {
    const auto& sub = sys(text).substitution();
    for (std::uint64_t j = 0; j < 200; ++j) {
      bool ok = adic_successor(sub, position_development(sub, 1, j, 6)) == position_development(sub, 1, j + 1, 6);
      o.require(ok, "(e) successor");
      succ += ok;
    }
  }
  o.detail << "(e) " << succ << "/400; ";
  // (f) strictly increasing U-iterates
  int nested = 0;
  for (const char* text : {fixtures::kEx1, fixtures::kReal3, fixtures::kComplex2}) {
    auto it = u_iterates(sys(text), 6);
    for (int k = 0; k < 6; ++k) {
      auto a = face_set(it[k]), b = face_set(it[k + 1]);
      bool ok = std::includes(b.begin(), b.end(), a.begin(), a.end()) && b.size() > a.size();
      o.require(ok, "(f) nesting");
      nested += ok;
    }
  }
  o.detail << "(f) " << nested << "/18";
  return o;
}

Outcome criterion10() {
  Outcome o;
  CoveringOptions opt;
  opt.samples = 10000;
  opt.level = 10;
  auto r = covering_degree_estimate(sys(fixtures::kReal3), opt);
  std::size_t ones = r.histogram.count(1) ? r.histogram.at(1) : 0;
  double frac = static_cast<double>(ones) / static_cast<double>(r.samples);
  o.detail << "degree 1 on " << ones << "/" << r.samples << " samples (" << frac * 100 << "%), ambiguous "
           << r.ambiguous << ", min degree " << r.min_degree << ", uncovered " << r.uncovered;
  o.require(r.modal_degree == 1 && frac >= 0.99, "modal degree 1 on 99%");
  o.require(r.min_degree >= 1 && r.uncovered == 0, "covering");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"ex1 orbit of 1/4", criterion1},
      {"ex1 expansions", criterion2},
      {"ex1 sigma-integers", criterion3},
      {"R x Q_3 pipeline", criterion4},
      {"first 3-adic level", criterion5},
      {"C x Q_2(sqrt 7) pipeline", criterion6},
      {"property F with finite-expansion cross-check", criterion7},
      {"contraction certificate", criterion8},
      {"property suite", criterion9},
      {"covering degree", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << ", " << secs
              << " s): " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
