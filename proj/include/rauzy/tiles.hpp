#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rauzy/numeration.hpp"

namespace rauzy {

using Face = State;
using FaceHash = StateHash;
using FaceSet = std::unordered_set<Face, FaceHash>;

std::vector<Face> t_ext_inverse(const System& sys, const Face& f);
// Union of the images, first occurrence order, duplicates removed.
std::vector<Face> t_ext_inverse(const System& sys, const std::vector<Face>& faces);

// Points stored by integer v-coordinates (x = sum c_i v_i), flattened.
struct PointSet {
  int dim = 0;
  std::vector<std::int64_t> coords;

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  const std::int64_t* point(std::size_t i) const { return coords.data() + i * dim; }
  void push(const std::int64_t* c) { coords.insert(coords.end(), c, c + dim); }
  void sort_unique();
  bool operator==(const PointSet& o) const { return dim == o.dim && coords == o.coords; }
  AlgebraicNumber value(const EigenData& eigen, std::size_t i) const;
};

struct TileApproximation {
  Letter letter = 1;
  int level = 0;
  PointSet points;              // alpha^k T_ext^-k(0, a), sorted and deduplicated
  std::uint64_t walk_count = 0;  // walks enumerated before deduplication
};

// Enumerates all walks of length k ending at a; value sum_i M^i P(p_i).
TileApproximation subtile_cloud(const System& sys, Letter a, int k, std::uint64_t cap = 50'000'000);

struct GifsTerm {
  Letter from;
  std::size_t edge;
  AlgebraicNumber digit;  // delta(p)
};
// R(a) = union over terms of alpha R(from) + digit
std::vector<GifsTerm> gifs_decomposition(const System& sys, Letter a);
// Level-k point set rebuilt from level-(k-1) clouds through the decomposition.
PointSet gifs_apply(const System& sys, Letter a, const std::vector<TileApproximation>& previous);

struct XTile {
  AlgebraicNumber x;
  std::vector<Letter> letters;  // subtiles R(a) + x with x in [0, delta(a))
};
XTile x_tile(const System& sys, const AlgebraicNumber& x);

// Each letter-a cloud translated by Phi'(delta(a)) = Phi'(v_a).
std::vector<PointSet> domain_exchange(const System& sys, const std::vector<TileApproximation>& clouds);

struct LineTiling {
  int depth = 0;
  Letter seed = 1;
  Word types;                                   // sigma^depth(seed)
  std::vector<std::vector<std::int64_t>> left;  // left endpoints, v-coordinates
  std::vector<std::int64_t> right_end;          // v-coordinates of alpha^depth delta(seed)
};
LineTiling line_tiling(const System& sys, int depth);

// Faces with the generators of D_a: Phi_infinity(v_i), i != a.
struct SteppedFace {
  Face face;
  std::vector<Letter> spans;
};
std::vector<SteppedFace> stepped_faces(const System& sys, const std::vector<Face>& faces);

// Dual substitution world: faces (x, a) with x rational.
struct LatticeFace {
  std::vector<Rational> x;
  Letter letter;
  bool operator==(const LatticeFace& o) const { return letter == o.letter && x == o.x; }
};
struct LatticeFaceHash {
  std::size_t operator()(const LatticeFace& f) const;
};

std::vector<LatticeFace> e1_star(const System& sys, const LatticeFace& f);
std::vector<LatticeFace> e1_star(const System& sys, const std::vector<LatticeFace>& faces);
// Segments [y, b] -> [M y - P(p), a] over edges b -p-> a.
struct Segment {
  std::vector<std::int64_t> y;
  Letter letter;
  bool operator==(const Segment& o) const = default;
};
std::vector<Segment> e1(const System& sys, const Segment& s);
std::vector<Segment> e1(const System& sys, const std::vector<Segment>& segs);
// (x, a) -> (<x, v>, a)
Face lattice_to_face(const System& sys, const LatticeFace& f);
// x in H>= and x - e_a in H<
bool is_stepped(const System& sys, const LatticeFace& f);

}  // namespace rauzy
