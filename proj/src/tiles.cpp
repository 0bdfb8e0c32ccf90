#include "rauzy/tiles.hpp"

#include <algorithm>
#include <numeric>

#include "rauzy/error.hpp"

namespace rauzy {

std::vector<Face> t_ext_inverse(const System& sys, const Face& f) { return t_inverse(sys, f); }

std::vector<Face> t_ext_inverse(const System& sys, const std::vector<Face>& faces) {
  std::vector<Face> out;
  FaceSet seen;
  for (auto& f : faces)
    for (auto& g : t_inverse(sys, f))
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

void PointSet::sort_unique() {
  std::size_t n = size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(point(a), point(a) + dim, point(b), point(b) + dim);
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<std::int64_t> out;
  out.reserve(coords.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t* p = point(idx[k]);
    if (k > 0 && std::equal(p, p + dim, point(idx[k - 1]))) continue;
    out.insert(out.end(), p, p + dim);
  }
  coords = std::move(out);
}

AlgebraicNumber PointSet::value(const EigenData& eigen, std::size_t i) const {
  return eigen.pair(std::vector<std::int64_t>(point(i), point(i) + dim));
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::ResourceCap, "tile coordinates overflow 64 bits; lower the level");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::ResourceCap, "tile coordinates overflow 64 bits; lower the level");
  return r;
}

std::vector<std::int64_t> mat_vec(const IntMatrix& m, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> r(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i] = checked_add(r[i], checked_mul(m(i, j), v[j]));
  return r;
}

}  // namespace

TileApproximation subtile_cloud(const System& sys, Letter a, int k, std::uint64_t cap) {
  const int n = sys.size();
  const auto& aut = sys.automaton();
  TileApproximation t;
  t.letter = a;
  t.level = k;
  t.points.dim = n;
  if (k == 0) {
    std::vector<std::int64_t> zero(n, 0);
    t.points.push(zero.data());
    t.walk_count = 1;
    return t;
  }
  // shifted[i][e] = M^i P(p_e)
  std::vector<std::vector<std::vector<std::int64_t>>> shifted(k);
  for (std::size_t e = 0; e < aut.edges().size(); ++e) {
    std::vector<std::int64_t> v = sys.edge_prefix_vector(e);
    for (int i = 0; i < k; ++i) {
      shifted[i].push_back(v);
      if (i + 1 < k) v = mat_vec(sys.matrix(), v);
    }
  }
  struct Frame {
    Letter letter;
    std::size_t next;  // index into aut.into(letter)
  };
  std::vector<Frame> stack{{a, 0}};
  std::vector<std::vector<std::int64_t>> acc(k + 1, std::vector<std::int64_t>(n, 0));
  while (!stack.empty()) {
    int depth = static_cast<int>(stack.size()) - 1;
    Frame& fr = stack.back();
    const auto& in = aut.into(fr.letter);
    if (fr.next == in.size()) {
      stack.pop_back();
      continue;
    }
    std::size_t e = in[fr.next++];
    for (int j = 0; j < n; ++j) acc[depth + 1][j] = checked_add(acc[depth][j], shifted[depth][e][j]);
    if (depth + 1 == k) {
      if (++t.walk_count > cap) fail(ErrorKind::ResourceCap, "subtile walk enumeration exceeds the cap");
      t.points.push(acc[k].data());
    } else {
      stack.push_back({aut.edge(e).from, 0});
    }
  }
  t.points.sort_unique();
  return t;
}

std::vector<GifsTerm> gifs_decomposition(const System& sys, Letter a) {
  std::vector<GifsTerm> terms;
  for (std::size_t e : sys.automaton().into(a)) terms.push_back({sys.automaton().edge(e).from, e, sys.edge_delta(e)});
  return terms;
}

PointSet gifs_apply(const System& sys, Letter a, const std::vector<TileApproximation>& previous) {
  PointSet out;
  out.dim = sys.size();
  std::vector<std::int64_t> c(out.dim);
  for (auto& term : gifs_decomposition(sys, a)) {
    const PointSet& prev = previous.at(term.from - 1).points;
    const auto& shift = sys.edge_prefix_vector(term.edge);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      std::vector<std::int64_t> v(prev.point(i), prev.point(i) + out.dim);
      v = mat_vec(sys.matrix(), v);
      for (int j = 0; j < out.dim; ++j) c[j] = checked_add(v[j], shift[j]);
      out.push(c.data());
    }
  }
  out.sort_unique();
  return out;
}

XTile x_tile(const System& sys, const AlgebraicNumber& x) {
  XTile t{x, {}};
  for (Letter a = 1; a <= sys.size(); ++a)
    if (sys.in_range(x, a)) t.letters.push_back(a);
  return t;
}

std::vector<PointSet> domain_exchange(const System& sys, const std::vector<TileApproximation>& clouds) {
  std::vector<PointSet> out;
  for (auto& t : clouds) {
    PointSet p = t.points;
    for (std::size_t i = 0; i < p.size(); ++i) p.coords[i * p.dim + (t.letter - 1)] += 1;
    out.push_back(std::move(p));
  }
  (void)sys;
  return out;
}

LineTiling line_tiling(const System& sys, int depth) {
  LineTiling lt;
  lt.depth = depth;
  lt.seed = sys.seed_letter();
  lt.types = sys.substitution().iterate(Word{lt.seed}, depth, 20'000'000);
  int n = sys.size();
  std::vector<std::int64_t> cur(n, 0);
  for (Letter l : lt.types) {
    lt.left.push_back(cur);
    cur[l - 1] += 1;
  }
  lt.right_end = cur;
  return lt;
}

std::vector<SteppedFace> stepped_faces(const System& sys, const std::vector<Face>& faces) {
  std::vector<SteppedFace> out;
  for (auto& f : faces) {
    SteppedFace s{f, {}};
    for (Letter b = 1; b <= sys.size(); ++b)
      if (b != f.letter) s.spans.push_back(b);
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t LatticeFaceHash::operator()(const LatticeFace& f) const {
  std::size_t h = static_cast<std::size_t>(f.letter);
  for (auto& q : f.x) h = hash_combine(h, hash_rational(q));
  return h;
}

std::vector<LatticeFace> e1_star(const System& sys, const LatticeFace& f) {
  std::vector<LatticeFace> out;
  const RatMatrix& minv = sys.eigen().matrix_inverse();
  for (std::size_t e : sys.automaton().into(f.letter)) {
    std::vector<Rational> y = f.x;
    const auto& p = sys.edge_prefix_vector(e);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += p[i];
    out.push_back({minv * y, sys.automaton().edge(e).from});
  }
  return out;
}

std::vector<LatticeFace> e1_star(const System& sys, const std::vector<LatticeFace>& faces) {
  std::vector<LatticeFace> out;
  std::unordered_set<LatticeFace, LatticeFaceHash> seen;
  for (auto& f : faces)
    for (auto& g : e1_star(sys, f))
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

std::vector<Segment> e1(const System& sys, const Segment& s) {
  std::vector<Segment> out;
  std::vector<std::int64_t> my = mat_vec(sys.matrix(), s.y);
  for (std::size_t e : sys.automaton().out_of(s.letter)) {
    const auto& p = sys.edge_prefix_vector(e);
    std::vector<std::int64_t> y = my;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= p[i];
    out.push_back({y, sys.automaton().edge(e).to});
  }
  return out;
}

std::vector<Segment> e1(const System& sys, const std::vector<Segment>& segs) {
  std::vector<Segment> out;
  for (auto& s : segs)
    for (auto& t : e1(sys, s)) out.push_back(t);
  return out;
}

Face lattice_to_face(const System& sys, const LatticeFace& f) { return {sys.eigen().from_v_coordinates(f.x), f.letter}; }

bool is_stepped(const System& sys, const LatticeFace& f) { return sys.in_range(lattice_to_face(sys, f).x, f.letter); }

}  // namespace rauzy
