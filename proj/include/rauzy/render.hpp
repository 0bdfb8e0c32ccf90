#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "rauzy/analysis.hpp"
#include "rauzy/embedding.hpp"
#include "rauzy/tiles.hpp"

namespace rauzy {

using Rgb = std::array<std::uint8_t, 3>;
Rgb letter_color(Letter a);

// Rows of CloudEmbedder columns for the points of a cloud translated by an
// element of Q(alpha). The translation must lie in the same p-adic box as
// the cloud or deeper; otherwise the Euclidean model is taken at the
// translation's valuation.
std::vector<long double> embed_cloud(const System& sys, const CloudEmbedder& emb, const PointSet& pts,
                                     const AlgebraicNumber* translation = nullptr);

struct PlotLayer {
  std::vector<long double> rows;  // `columns` values per point
  Rgb color;
};

struct PlotOptions {
  int width = 1024, height = 1024;
  int x_column = 0, y_column = 1;  // y_column beyond the last column plots letters on separate rows
  bool mirror = false;             // flips the horizontal axis
};

struct PlotExtent {
  long double x_lo, x_hi, y_lo, y_hi;
};

struct Raster {
  int width = 0, height = 0;
  std::vector<std::uint8_t> rgb;
  PlotExtent extent{};
  std::size_t plotted = 0;
};

Raster rasterize(const std::vector<PlotLayer>& layers, int columns, const PlotOptions& options);
void write_png(const std::string& path, const Raster& raster);

// CSV: letter, translation index, exact v-coordinates, then embedding columns.
void write_cloud_csv(std::ostream& out, const System& sys, const CloudEmbedder& emb,
                     const std::vector<const TileApproximation*>& clouds, const std::vector<int>& translation_index,
                     const std::vector<std::vector<long double>>& rows);

void write_line_svg(std::ostream& out, const System& sys, const LineTiling& tiling, bool mirror);
void write_stepped_svg(std::ostream& out, const System& sys, const std::vector<SteppedFace>& faces, bool mirror);
void write_graph_dot(std::ostream& out, const System& sys, const ZeroGraph& graph);

}  // namespace rauzy
