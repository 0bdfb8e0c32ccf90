#include "rauzy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <thread>
#include <unordered_map>

#include "rauzy/error.hpp"
#include "rauzy/lattice.hpp"
#include "rauzy/numeration.hpp"

namespace rauzy {

namespace {

AlgebraicNumber from_int_coords(const System& sys, const IntVec& c) {
  std::vector<Rational> q(c.begin(), c.end());
  return sys.eigen().from_v_coordinates(q);
}

std::optional<int> coord_valuation(const System& sys, std::size_t place, const IntVec& c) {
  return exact_valuation(from_int_coords(sys, c), sys.space().padic(place));
}

// Sublattice of `rows` whose elements have valuation >= target at `place`.
std::vector<IntVec> refine(const System& sys, std::vector<IntVec> rows, std::size_t place, int target) {
  const int n = sys.size();
  const AlphaPartRing& ring = sys.space().padic(place);
  const BigInt& p = ring.prime();
  auto val = [&](const IntVec& c) {
    auto v = coord_valuation(sys, place, c);
    return v ? *v : std::numeric_limits<int>::max();
  };
  while (true) {
    int s = std::numeric_limits<int>::max();
    for (auto& r : rows) s = std::min(s, val(r));
    if (s >= target) return rows;
    // kernel of the reduction map to P^s / P^(s+1)
    std::vector<IntVec> image, kernel;
    for (auto& b : rows) {
      if (val(b) > s) {
        kernel.push_back(b);
        continue;
      }
      std::size_t m = image.size();
      std::vector<long> k(m, 0);
      bool found = false;
      long total = 1;
      for (std::size_t i = 0; i < m; ++i) total *= p.get_si();
      for (long idx = 0; idx < total && !found; ++idx) {
        long t = idx;
        IntVec cand = b;
        for (std::size_t i = 0; i < m; ++i) {
          k[i] = t % p.get_si();
          t /= p.get_si();
          for (int j = 0; j < n; ++j) cand[j] -= BigInt(k[i]) * image[i][j];
        }
        if (val(cand) > s) {
          kernel.push_back(cand);
          found = true;
        }
      }
      if (!found) image.push_back(b);
    }
    for (auto& w : image) {
      IntVec pw = w;
      for (auto& c : pw) c *= p;
      kernel.push_back(pw);
    }
    rows = hnf(kernel, n);
  }
}

std::vector<IntVec> refine_all(const System& sys, std::vector<IntVec> rows, const std::vector<int>& targets) {
  for (std::size_t i = 0; i < targets.size(); ++i) rows = refine(sys, std::move(rows), i, targets[i]);
  return rows;
}

struct RealEmbedding {
  std::vector<long double> dominant;                // per v_i
  std::vector<std::vector<long double>> arch;       // [real coordinate][v_i]
};

RealEmbedding real_embedding(const System& sys) {
  RealEmbedding e;
  const auto& space = sys.space();
  int ad = space.arch_dimension();
  e.arch.assign(ad, {});
  for (auto& v : sys.eigen().left()) {
    e.dominant.push_back(v.approx());
    int row = 0;
    for (std::size_t p = 0; p < space.arch().size(); ++p) {
      Complex z = space.arch_value(v, p);
      e.arch[row++].push_back(z.real());
      if (space.arch()[p].is_complex) e.arch[row++].push_back(z.imag());
    }
  }
  return e;
}

std::vector<Complex> arch_values(const System& sys, const AlgebraicNumber& x) {
  std::vector<Complex> r;
  for (std::size_t p = 0; p < sys.space().arch().size(); ++p) r.push_back(sys.space().arch_value(x, p));
  return r;
}

bool face_less(const Face& a, const Face& b) {
  if (a.x == b.x) return a.letter < b.letter;
  return a.x < b.x;
}

}  // namespace

GammaWindow ball_window(const System& sys, long double radius) {
  GammaWindow w;
  const auto& space = sys.space();
  for (auto& pl : space.arch()) {
    long double r = pl.is_complex ? std::sqrt(radius) : radius;
    w.arch_radius.push_back(r);
    w.arch_box.push_back({-r, r});
    if (pl.is_complex) w.arch_box.push_back({-r, r});
  }
  for (std::size_t i = 0; i < space.padic_count(); ++i) {
    long double ln = std::log(to_long_double(space.padic(i).residue_norm()));
    w.min_valuation.push_back(static_cast<int>(std::ceil(-std::log(radius) / ln - 1e-12L)));
  }
  return w;
}

TileBounds tile_bounds(const System& sys) {
  const auto& space = sys.space();
  const auto& aut = sys.automaton();
  int n = sys.size();
  std::size_t places = space.arch().size();
  std::vector<std::vector<Complex>> dv;
  for (std::size_t e = 0; e < aut.edges().size(); ++e) dv.push_back(arch_values(sys, sys.edge_delta(e)));
  TileBounds tb;
  tb.real.assign(n, std::vector<std::pair<long double, long double>>(places, {0, 0}));
  tb.radius.assign(n, std::vector<long double>(places, 0));
  for (int it = 0; it < 4000; ++it) {
    long double change = 0;
    auto real = tb.real;
    auto rad = tb.radius;
    for (Letter a = 1; a <= n; ++a) {
      for (std::size_t p = 0; p < places; ++p) {
        Complex al = space.arch()[p].root;
        long double lo = INFINITY, hi = -INFINITY, r = 0;
        for (std::size_t e : aut.into(a)) {
          Letter b = aut.edge(e).from;
          r = std::max(r, std::abs(dv[e][p]) + std::abs(al) * tb.radius[b - 1][p]);
          if (!space.arch()[p].is_complex) {
            long double x1 = al.real() * tb.real[b - 1][p].first, x2 = al.real() * tb.real[b - 1][p].second;
            lo = std::min(lo, dv[e][p].real() + std::min(x1, x2));
            hi = std::max(hi, dv[e][p].real() + std::max(x1, x2));
          }
        }
        change = std::max(change, std::fabs(r - rad[a - 1][p]));
        rad[a - 1][p] = r;
        if (!space.arch()[p].is_complex) {
          change = std::max({change, std::fabs(lo - real[a - 1][p].first), std::fabs(hi - real[a - 1][p].second)});
          real[a - 1][p] = {lo, hi};
        }
      }
    }
    tb.real = real;
    tb.radius = rad;
    if (change < 1e-17L) break;
  }
  return tb;
}

GammaWindow tile_window(const System& sys) {
  const auto& space = sys.space();
  TileBounds tb = tile_bounds(sys);
  GammaWindow w;
  for (std::size_t p = 0; p < space.arch().size(); ++p) {
    long double r = 0, lo = INFINITY, hi = -INFINITY;
    for (Letter a = 1; a <= sys.size(); ++a) {
      r = std::max(r, tb.radius[a - 1][p]);
      lo = std::min(lo, -tb.real[a - 1][p].second);
      hi = std::max(hi, -tb.real[a - 1][p].first);
    }
    r *= 1 + 1e-9L;
    w.arch_radius.push_back(r);
    if (space.arch()[p].is_complex) {
      w.arch_box.push_back({-r, r});
      w.arch_box.push_back({-r, r});
    } else {
      long double pad = 1e-9L * (hi - lo + 1);
      w.arch_box.push_back({lo - pad, hi + pad});
    }
  }
  w.min_valuation = sys.d_p();
  return w;
}

std::vector<Face> gamma_query(const System& sys, const GammaWindow& window, GammaCertificate* cert, int max_level) {
  const int n = sys.size();
  const auto& space = sys.space();
  if (window.min_valuation.size() != space.padic_count() || window.arch_radius.size() != space.arch().size() ||
      static_cast<int>(window.arch_box.size()) != space.arch_dimension())
    fail(ErrorKind::Validation, "window does not match the representation space");
  std::vector<int> h;
  for (std::size_t i = 0; i < space.padic_count(); ++i) h.push_back(space.padic(i).alpha_valuation());
  auto targets = [&](int level) {
    std::vector<int> t = window.min_valuation;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += level * h[i];
    return t;
  };
  std::vector<IntVec> rows(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  rows = hnf(refine_all(sys, rows, targets(0)), n);
  const IntMatrix& m = sys.matrix();
  int level = 0;
  while (true) {
    std::vector<IntVec> next = hnf(refine_all(sys, rows, targets(level + 1)), n);
    std::vector<IntVec> mc;
    for (auto& r : rows) {
      IntVec v(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[i] += BigInt(static_cast<long>(m(i, j))) * r[j];
      mc.push_back(v);
    }
    if (hnf(mc, n) == next) break;
    rows = std::move(next);
    if (++level > max_level) fail(ErrorKind::ResourceCap, "translation lattice did not stabilise");
  }
  // Lambda = M^-level C_level, rational rows in v-coordinates
  RatMatrix minv_pow = sys.eigen().matrix_inverse().pow(level);
  std::vector<std::vector<Rational>> basis;
  for (auto& r : rows) {
    std::vector<Rational> q(r.begin(), r.end());
    basis.push_back(minv_pow * q);
  }
  RealEmbedding emb = real_embedding(sys);
  long double span = 0;
  for (auto& d : emb.dominant) span = std::max(span, d);
  // coordinates: dominant, then Archimedean real coordinates
  std::vector<long double> center{span / 2}, half{span / 2};
  for (auto& b : window.arch_box) {
    center.push_back((b.first + b.second) / 2);
    half.push_back(std::max((b.second - b.first) / 2, 1e-30L));
  }
  auto embed_scaled = [&](const std::vector<Rational>& c) {
    std::vector<long double> y(n, 0);
    for (int i = 0; i < n; ++i) {
      long double ci = c[i].get_d();
      if (!std::isfinite(ci)) ci = static_cast<long double>(to_long_double(c[i]));
      y[0] += ci * emb.dominant[i];
      for (std::size_t j = 0; j < emb.arch.size(); ++j) y[j + 1] += ci * emb.arch[j][i];
    }
    for (int j = 0; j < n; ++j) y[j] /= half[j];
    return y;
  };
  std::vector<std::vector<long double>> real_basis;
  for (auto& b : basis) real_basis.push_back(embed_scaled(b));
  auto reduced = real_basis;
  auto u = lll_reduce(reduced);
  std::vector<long double> c_scaled(n);
  for (int j = 0; j < n; ++j) c_scaled[j] = center[j] / half[j];
  std::vector<Face> faces;
  std::size_t examined = 0;
  enumerate_ball(reduced, c_scaled, n * (1 + 1e-9L), [&](const std::vector<std::int64_t>& k) {
    ++examined;
    std::vector<long double> y(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[j] += static_cast<long double>(k[i]) * reduced[i][j];
    for (int j = 0; j < n; ++j)
      if (std::fabs(y[j] - c_scaled[j]) > 1 + 1e-9L) return true;
    std::vector<Rational> xc(n, 0);
    for (int i = 0; i < n; ++i) {
      std::int64_t w = 0;
      for (int t = 0; t < n; ++t) w += k[t] * u[t][i];
      if (w == 0) continue;
      for (int j = 0; j < n; ++j) xc[j] += Rational(static_cast<long>(w)) * basis[i][j];
    }
    AlgebraicNumber x = sys.eigen().from_v_coordinates(xc);
    std::vector<Letter> letters;
    for (Letter a = 1; a <= n; ++a)
      if (sys.in_range(x, a)) letters.push_back(a);
    if (letters.empty()) return true;
    auto av = arch_values(sys, x);
    int row = 0;
    for (std::size_t p = 0; p < av.size(); ++p) {
      long double tol = 1e-12L * (1 + window.arch_radius[p]);
      if (std::abs(av[p]) > window.arch_radius[p] + tol) return true;
      if (av[p].real() < window.arch_box[row].first - tol || av[p].real() > window.arch_box[row].second + tol) return true;
      ++row;
      if (space.arch()[p].is_complex) {
        if (av[p].imag() < window.arch_box[row].first - tol || av[p].imag() > window.arch_box[row].second + tol)
          return true;
        ++row;
      }
    }
    for (std::size_t i = 0; i < space.padic_count(); ++i) {
      auto v = exact_valuation(x, space.padic(i));
      if (v && *v < window.min_valuation[i]) fail(ErrorKind::Internal, "translation lattice admitted a point of low valuation");
    }
    for (Letter a : letters) faces.push_back({x, a});
    return true;
  });
  std::sort(faces.begin(), faces.end(), face_less);
  if (cert) {
    cert->stable_level = level;
    cert->lattice_points = examined;
  }
  return faces;
}

GammaBall gamma_in_ball(const System& sys, long double radius) {
  GammaBall b;
  b.radius = radius;
  b.faces = gamma_query(sys, ball_window(sys, radius), &b.certificate);
  return b;
}

std::size_t ZeroGraph::edge_count() const {
  std::size_t c = 0;
  for (auto& a : adjacency) c += a.size();
  return c;
}

ZeroGraph zero_expansion_graph(const System& sys) {
  std::vector<Face> faces = gamma_query(sys, tile_window(sys));
  std::unordered_map<Face, std::size_t, FaceHash> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
  std::vector<std::vector<std::size_t>> adj(faces.size());
  std::size_t edges = 0;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (auto& g : t_ext_inverse(sys, faces[i])) {
      auto it = index.find(g);
      if (it != index.end()) {
        adj[i].push_back(it->second);
        ++edges;
      }
    }
  // drop nodes without an infinite walk
  std::vector<std::vector<std::size_t>> rev(faces.size());
  std::vector<std::size_t> outdeg(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    outdeg[i] = adj[i].size();
    for (std::size_t j : adj[i]) rev[j].push_back(i);
  }
  std::vector<bool> alive(faces.size(), true);
  std::queue<std::size_t> q;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (outdeg[i] == 0) q.push(i);
  while (!q.empty()) {
    std::size_t i = q.front();
    q.pop();
    if (!alive[i]) continue;
    alive[i] = false;
    for (std::size_t j : rev[i])
      if (alive[j] && --outdeg[j] == 0) q.push(j);
  }
  ZeroGraph g;
  g.untrimmed_nodes = faces.size();
  g.untrimmed_edges = edges;
  std::vector<std::size_t> remap(faces.size(), SIZE_MAX);
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (alive[i]) {
      remap[i] = g.nodes.size();
      g.nodes.push_back(faces[i]);
    }
  g.adjacency.resize(g.nodes.size());
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (alive[i])
      for (std::size_t j : adj[i])
        if (alive[j]) g.adjacency[remap[i]].push_back(remap[j]);
  return g;
}

FVerdict check_property_F(const System& sys, const ZeroGraph& graph) {
  FVerdict v;
  for (auto& f : graph.nodes)
    if (!f.x.is_zero()) v.witnesses.push_back(f);
  v.holds = v.witnesses.empty();
  if (!v.holds)
    for (auto& f : v.witnesses)
      if (expand(sys, f.x, f.letter, 100000).kind == ExpansionKind::EventuallyPeriodic) v.infinite_expansion.push_back(f);
  v.conclusive = v.holds || sys.coincidence().holds || !v.infinite_expansion.empty();
  return v;
}

std::vector<std::vector<Face>> u_iterates(const System& sys, int m) {
  std::vector<std::vector<Face>> out;
  std::vector<Face> cur;
  for (Letter a = 1; a <= sys.size(); ++a) cur.push_back({sys.field().zero(), a});
  out.push_back(cur);
  for (int k = 1; k <= m; ++k) {
    cur = t_ext_inverse(sys, cur);
    std::sort(cur.begin(), cur.end(), face_less);
    out.push_back(cur);
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct CoverContext {
  const System* sys;
  TileBounds bounds;
  std::vector<std::unique_ptr<FastPadicRing>> rings;
  std::vector<int> scale;       // F_i: p-adic values are stored as alpha^-F_i * z
  std::vector<int> need;        // d_i - F_i: required scaled valuation inside a tile
  std::vector<std::vector<Complex>> edge_arch;
  std::vector<std::vector<FastPadicRing::Elem>> edge_padic;  // [place][edge]
  std::vector<Complex> alpha;
  long double tol;
};

bool inside(const CoverContext& cx, const std::vector<Complex>& w, Letter b) {
  const auto& arch = cx.sys->space().arch();
  for (std::size_t p = 0; p < arch.size(); ++p) {
    if (arch[p].is_complex) {
      if (std::abs(w[p]) > cx.bounds.radius[b - 1][p] + cx.tol) return false;
    } else {
      const auto& iv = cx.bounds.real[b - 1][p];
      if (w[p].real() < iv.first - cx.tol || w[p].real() > iv.second + cx.tol) return false;
    }
  }
  return true;
}

bool survives(const CoverContext& cx, const std::vector<Complex>& w, const std::vector<FastPadicRing::Elem>& s,
              Letter b, int depth) {
  if (depth == 0) return true;
  const auto& aut = cx.sys->automaton();
  std::vector<Complex> w2(w.size());
  std::vector<FastPadicRing::Elem> s2(s.size());
  for (std::size_t e : aut.into(b)) {
    Letter c = aut.edge(e).from;
    for (std::size_t p = 0; p < w.size(); ++p) w2[p] = (w[p] - cx.edge_arch[e][p]) / cx.alpha[p];
    if (!inside(cx, w2, c)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      const FastPadicRing& r = *cx.rings[i];
      FastPadicRing::Elem diff = r.sub(s[i], cx.edge_padic[i][e]);
      if (r.valuation(diff, cx.need[i] + 1) < cx.need[i] + 1) {
        ok = false;
      } else {
        s2[i] = r.div_alpha(diff);
      }
    }
    if (!ok) continue;
    if (survives(cx, w2, s2, c, depth - 1)) return true;
  }
  return false;
}

}  // namespace

CoveringResult covering_degree_estimate(const System& sys, const CoveringOptions& opt) {
  const auto& space = sys.space();
  const int ad = space.arch_dimension();
  CoverContext cx;
  cx.sys = &sys;
  cx.bounds = tile_bounds(sys);
  cx.tol = opt.tolerance;
  std::vector<long double> center = opt.center;
  if (center.empty()) center.assign(ad, 0);
  if (static_cast<int>(center.size()) != ad) fail(ErrorKind::Validation, "sample centre does not match the Archimedean dimension");
  std::vector<int> floor = opt.padic_floor;
  if (floor.empty()) floor = sys.d_p();
  if (floor.size() != space.padic_count()) fail(ErrorKind::Validation, "p-adic floors do not match the places");
  if (opt.check_level < opt.level) fail(ErrorKind::Validation, "check level must not be below the level");
  for (std::size_t p = 0; p < space.arch().size(); ++p) cx.alpha.push_back(space.arch()[p].root);
  for (std::size_t e = 0; e < sys.automaton().edges().size(); ++e) cx.edge_arch.push_back(arch_values(sys, sys.edge_delta(e)));
  for (std::size_t i = 0; i < space.padic_count(); ++i) {
    const AlphaPartRing& ring = space.padic(i);
    if (!ring.digit_model()) fail(ErrorKind::Unsupported, "covering estimate needs alpha to be a uniformiser with f = 1");
    cx.rings.push_back(std::make_unique<FastPadicRing>(ring));
    if (opt.check_level + 2 >= cx.rings.back()->digits_precision())
      fail(ErrorKind::Precision, "check level exceeds the fast p-adic precision");
    cx.scale.push_back(std::min(floor[i], sys.d_p()[i]));
    cx.need.push_back(sys.d_p()[i] - cx.scale.back());
    std::vector<FastPadicRing::Elem> ev;
    for (std::size_t e = 0; e < sys.automaton().edges().size(); ++e)
      ev.push_back(cx.rings[i]->from(embed_padic(sys.edge_delta(e), ring), -cx.scale[i]));
    cx.edge_padic.push_back(ev);
  }
  // candidate translations: sample box widened by the tile hull
  GammaWindow win;
  TileBounds& tb = cx.bounds;
  {
    int row = 0;
    for (std::size_t p = 0; p < space.arch().size(); ++p) {
      long double r = 0, lo = INFINITY, hi = -INFINITY;
      for (Letter a = 1; a <= sys.size(); ++a) {
        r = std::max(r, tb.radius[a - 1][p]);
        lo = std::min(lo, tb.real[a - 1][p].first);
        hi = std::max(hi, tb.real[a - 1][p].second);
      }
      if (space.arch()[p].is_complex) {
        long double c0 = center[row], c1 = center[row + 1];
        win.arch_box.push_back({c0 - opt.half_width - r - opt.tolerance, c0 + opt.half_width + r + opt.tolerance});
        win.arch_box.push_back({c1 - opt.half_width - r - opt.tolerance, c1 + opt.half_width + r + opt.tolerance});
        win.arch_radius.push_back(std::hypot(std::fabs(c0) + opt.half_width, std::fabs(c1) + opt.half_width) + r + 1);
        row += 2;
      } else {
        long double c0 = center[row];
        // z - gamma in [lo, hi]  =>  gamma in [z - hi, z - lo]
        win.arch_box.push_back({c0 - opt.half_width - hi - opt.tolerance, c0 + opt.half_width - lo + opt.tolerance});
        win.arch_radius.push_back(std::fabs(c0) + opt.half_width + std::max(std::fabs(lo), std::fabs(hi)) + 1);
        row += 1;
      }
    }
    win.min_valuation = cx.scale;
  }
  std::vector<Face> faces = gamma_query(sys, win);
  struct Candidate {
    Letter letter;
    std::vector<Complex> arch;
    std::vector<FastPadicRing::Elem> padic;
  };
  std::vector<Candidate> cands;
  for (auto& f : faces) {
    Candidate c{f.letter, arch_values(sys, f.x), {}};
    for (std::size_t i = 0; i < space.padic_count(); ++i)
      c.padic.push_back(cx.rings[i]->from(embed_padic(f.x, space.padic(i)), -cx.scale[i]));
    cands.push_back(std::move(c));
  }
  const std::size_t N = opt.samples;
  std::vector<int> deg(N, 0), deg_check(N, 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      std::mt19937_64 rng(splitmix64(opt.seed * 0x100000001b3ULL + s));
      std::uniform_real_distribution<double> uni(-1.0, 1.0);
      std::vector<Complex> z;
      int row = 0;
      for (std::size_t p = 0; p < space.arch().size(); ++p) {
        long double re = center[row] + opt.half_width * static_cast<long double>(uni(rng));
        long double im = 0;
        if (space.arch()[p].is_complex) {
          im = center[row + 1] + opt.half_width * static_cast<long double>(uni(rng));
          row += 2;
        } else {
          row += 1;
        }
        z.push_back(Complex(re, im));
      }
      std::vector<FastPadicRing::Elem> zp;
      for (std::size_t i = 0; i < cx.rings.size(); ++i) {
        const FastPadicRing& r = *cx.rings[i];
        std::uniform_int_distribution<std::uint64_t> dig(0, r.prime() - 1);
        FastPadicRing::Elem acc;
        for (int k = 0; k < r.digits_precision() * r.degree(); ++k) acc = r.add(r.mul_alpha(acc), r.from_digit(dig(rng)));
        for (int k = 0; k < floor[i] - cx.scale[i]; ++k) acc = r.mul_alpha(acc);
        zp.push_back(acc);
      }
      int d = 0, dc = 0;
      std::vector<Complex> w(z.size());
      std::vector<FastPadicRing::Elem> sp(zp.size());
      for (auto& c : cands) {
        for (std::size_t p = 0; p < z.size(); ++p) w[p] = z[p] - c.arch[p];
        if (!inside(cx, w, c.letter)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < zp.size() && ok; ++i) {
          sp[i] = cx.rings[i]->sub(zp[i], c.padic[i]);
          ok = cx.rings[i]->valuation(sp[i], cx.need[i]) >= cx.need[i];
        }
        if (!ok) continue;
        if (!survives(cx, w, sp, c.letter, opt.level)) continue;
        ++d;
        if (survives(cx, w, sp, c.letter, opt.check_level)) ++dc;
      }
      deg[s] = d;
      deg_check[s] = dc;
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, N)));
  if (threads <= 1) {
    work(0, N);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (N + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t b = t * chunk, e = std::min(N, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  CoveringResult res;
  res.samples = N;
  res.level = opt.level;
  res.check_level = opt.check_level;
  res.candidate_faces = cands.size();
  res.min_degree = N ? *std::min_element(deg.begin(), deg.end()) : 0;
  for (std::size_t s = 0; s < N; ++s) {
    if (deg[s] == 0) ++res.uncovered;
    if (deg[s] != deg_check[s]) {
      ++res.ambiguous;
      continue;
    }
    ++res.histogram[deg[s]];
  }
  for (auto& [k, c] : res.histogram)
    if (c > res.modal_count) {
      res.modal_count = c;
      res.modal_degree = k;
    }
  long double r = 0;
  for (std::size_t p = 0; p < space.arch().size(); ++p)
    for (Letter a = 1; a <= sys.size(); ++a)
      r = std::max(r, tb.radius[a - 1][p] * std::pow(std::abs(cx.alpha[p]), static_cast<long double>(opt.level)));
  res.resolution = r;
  return res;
}

}  // namespace rauzy
