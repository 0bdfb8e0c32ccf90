#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "rauzy/tiles.hpp"

namespace rauzy {

// Translation-set window: the dominant coordinate always ranges over
// [0, max_a delta(a)); the other places are bounded per coordinate.
struct GammaWindow {
  std::vector<std::pair<long double, long double>> arch_box;  // per real coordinate
  std::vector<long double> arch_radius;                       // per Archimedean place, plain modulus
  std::vector<int> min_valuation;                             // per p-adic place
};

// ||Phi'(x)|| <= R with the place absolute values of K_sigma.
GammaWindow ball_window(const System& sys, long double radius);
// Per-place hull of -R(a) over all letters: |z_j| <= max|delta_j| / (1 - |alpha_j|), v_P >= d_P.
GammaWindow tile_window(const System& sys);

struct GammaCertificate {
  int stable_level = 0;          // L with alpha^-L C_L = alpha^-(L+1) C_(L+1)
  std::size_t lattice_points = 0;  // candidates examined
};

std::vector<Face> gamma_query(const System& sys, const GammaWindow& window, GammaCertificate* cert = nullptr,
                              int max_level = 64);

struct GammaBall {
  long double radius = 0;
  std::vector<Face> faces;
  GammaCertificate certificate;
};
GammaBall gamma_in_ball(const System& sys, long double radius);

struct ZeroGraph {
  std::vector<Face> nodes;
  std::vector<std::vector<std::size_t>> adjacency;
  std::size_t untrimmed_nodes = 0;
  std::size_t untrimmed_edges = 0;
  std::size_t edge_count() const;
};
ZeroGraph zero_expansion_graph(const System& sys);

struct FVerdict {
  bool holds = false;
  std::vector<Face> witnesses;  // nodes with non-zero translation
  // A failure is conclusive under strong coincidence, or when some Gamma face
  // has a provably infinite expansion (recorded in infinite_expansion).
  bool conclusive = true;
  std::vector<Face> infinite_expansion;
};
FVerdict check_property_F(const System& sys, const ZeroGraph& graph);

// T_ext^-k(U) for k = 0..m, U = {(0, a)}.
std::vector<std::vector<Face>> u_iterates(const System& sys, int m);

struct CoveringOptions {
  std::size_t samples = 10000;
  int level = 10;
  int check_level = 20;           // deeper level used to flag boundary-ambiguous samples
  std::uint64_t seed = 1;
  unsigned threads = 0;           // 0: hardware concurrency
  long double half_width = 1.0L;  // Archimedean sample box around `center`
  std::vector<long double> center;  // per real Archimedean coordinate (default 0)
  std::vector<int> padic_floor;     // sample p-adic parts in P^floor (default d_P)
  long double tolerance = 1e-9L;
};

struct CoveringResult {
  std::map<int, std::size_t> histogram;  // degree at `level` over unambiguous samples
  std::size_t samples = 0;
  std::size_t ambiguous = 0;
  int modal_degree = 0;
  std::size_t modal_count = 0;
  int min_degree = 0;                    // over all samples, at `level`
  std::size_t uncovered = 0;             // samples of degree 0 (window error)
  std::size_t candidate_faces = 0;
  long double resolution = 0;            // Archimedean tile-bound radius times |alpha'|^level
  int level = 0, check_level = 0;
};
CoveringResult covering_degree_estimate(const System& sys, const CoveringOptions& options);

// Per-letter bounds of the Archimedean coordinates of R(a): [lo, hi] for each
// real place, a modulus bound for complex places.
struct TileBounds {
  std::vector<std::vector<std::pair<long double, long double>>> real;  // [letter][real place]
  std::vector<std::vector<long double>> radius;                        // [letter][arch place]
};
TileBounds tile_bounds(const System& sys);

}  // namespace rauzy
