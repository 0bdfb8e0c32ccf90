#include "rauzy/render.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>

#include "rauzy/error.hpp"

namespace rauzy {

Rgb letter_color(Letter a) {
  static const Rgb palette[] = {{128, 40, 140}, {235, 190, 30}, {40, 120, 200}, {200, 70, 50},
                                {60, 160, 90},  {120, 120, 120}, {230, 120, 180}, {20, 20, 20}};
  return palette[(a - 1) % 8];
}

std::vector<long double> embed_cloud(const System& sys, const CloudEmbedder& emb, const PointSet& pts,
                                     const AlgebraicNumber* translation) {
  const auto& space = sys.space();
  const int cols = emb.columns(), ad = emb.arch_dimension();
  std::vector<long double> shift(ad, 0);
  std::vector<int> scale(space.padic_count());
  std::vector<FastPadicRing::Elem> tr(space.padic_count());
  for (std::size_t i = 0; i < space.padic_count(); ++i) scale[i] = emb.fast(i) ? emb.d_p(i) : 0;
  if (translation) {
    int row = 0;
    for (std::size_t p = 0; p < space.arch().size(); ++p) {
      Complex z = space.arch_value(*translation, p);
      shift[row++] = z.real();
      if (space.arch()[p].is_complex) shift[row++] = z.imag();
    }
    for (std::size_t i = 0; i < space.padic_count(); ++i) {
      if (!emb.fast(i)) continue;
      auto v = exact_valuation(*translation, space.padic(i));
      if (v) scale[i] = std::min(scale[i], *v);
      tr[i] = emb.ring(i).from(embed_padic(*translation, space.padic(i)), -scale[i]);
    }
  }
  std::vector<long double> rows(pts.size() * cols);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    long double* out = rows.data() + k * cols;
    const std::int64_t* c = pts.point(k);
    emb.arch(c, out);
    for (int j = 0; j < ad; ++j) out[j] += shift[j];
    for (std::size_t i = 0; i < space.padic_count(); ++i) {
      if (emb.fast(i)) {
        const FastPadicRing& r = emb.ring(i);
        FastPadicRing::Elem a = emb.padic(c, i);
        for (int s = scale[i]; s < emb.d_p(i); ++s) a = r.mul_alpha(a);
        if (translation) a = r.add(a, tr[i]);
        out[ad + i] = r.model(a, -scale[i], emb.digits());
      } else {
        std::vector<std::int64_t> cv(c, c + pts.dim);
        AlgebraicNumber x = sys.eigen().pair(cv);
        if (translation) x += *translation;
        out[ad + i] = coefficient_model(embed_padic(x, space.padic(i)), 12);
      }
    }
  }
  return rows;
}

Raster rasterize(const std::vector<PlotLayer>& layers, int columns, const PlotOptions& opt) {
  if (opt.width <= 0 || opt.height <= 0 || opt.width > 16384 || opt.height > 16384)
    fail(ErrorKind::Validation, "raster size out of range");
  bool letter_rows = opt.y_column >= columns;
  auto yval = [&](const PlotLayer& l, std::size_t k, std::size_t layer) {
    return letter_rows ? static_cast<long double>(layer) : l.rows[k * columns + opt.y_column];
  };
  Raster r;
  r.width = opt.width;
  r.height = opt.height;
  r.rgb.assign(static_cast<std::size_t>(opt.width) * opt.height * 3, 255);
  long double xl = INFINITY, xh = -INFINITY, yl = INFINITY, yh = -INFINITY;
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const auto& l = layers[li];
    for (std::size_t k = 0; k * columns < l.rows.size(); ++k) {
      long double x = l.rows[k * columns + opt.x_column], y = yval(l, k, li);
      xl = std::min(xl, x), xh = std::max(xh, x), yl = std::min(yl, y), yh = std::max(yh, y);
    }
  }
  if (!(xl <= xh)) return r;
  long double px = (xh - xl) * 0.02L + 1e-12L, py = (yh - yl) * 0.02L + 1e-12L;
  if (letter_rows) py = 0.5L;
  xl -= px, xh += px, yl -= py, yh += py;
  r.extent = {xl, xh, yl, yh};
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const auto& l = layers[li];
    for (std::size_t k = 0; k * columns < l.rows.size(); ++k) {
      long double x = l.rows[k * columns + opt.x_column], y = yval(l, k, li);
      int i = static_cast<int>((x - xl) / (xh - xl) * opt.width);
      int j = static_cast<int>((yh - y) / (yh - yl) * opt.height);
      if (opt.mirror) i = opt.width - 1 - i;
      if (i < 0 || j < 0 || i >= opt.width || j >= opt.height) continue;
      std::size_t o = (static_cast<std::size_t>(j) * opt.width + i) * 3;
      r.rgb[o] = l.color[0], r.rgb[o + 1] = l.color[1], r.rgb[o + 2] = l.color[2];
      ++r.plotted;
    }
  }
  return r;
}

void write_png(const std::string& path, const Raster& raster) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) fail(ErrorKind::Validation, "cannot open " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    fail(ErrorKind::Internal, "libpng failure writing " + path);
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, raster.width, raster.height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int j = 0; j < raster.height; ++j)
    png_write_row(png, const_cast<png_bytep>(raster.rgb.data() + static_cast<std::size_t>(j) * raster.width * 3));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

void write_cloud_csv(std::ostream& out, const System& sys, const CloudEmbedder& emb,
                     const std::vector<const TileApproximation*>& clouds, const std::vector<int>& translation_index,
                     const std::vector<std::vector<long double>>& rows) {
  const int cols = emb.columns();
  out << "letter,translation";
  for (int i = 1; i <= sys.size(); ++i) out << ",v" << i;
  for (auto& c : sys.space().column_names()) out << ',' << c;
  out << '\n' << std::setprecision(17);
  for (std::size_t t = 0; t < clouds.size(); ++t) {
    const PointSet& ps = clouds[t]->points;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      out << clouds[t]->letter << ',' << translation_index[t];
      for (int i = 0; i < ps.dim; ++i) out << ',' << ps.point(k)[i];
      for (int j = 0; j < cols; ++j) out << ',' << static_cast<double>(rows[t][k * cols + j]);
      out << '\n';
    }
  }
}

namespace {

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
  return buf;
}

long double value_of(const System& sys, const std::vector<std::int64_t>& c) { return sys.eigen().pair(c).approx(); }

}  // namespace

void write_line_svg(std::ostream& out, const System& sys, const LineTiling& t, bool mirror) {
  const long double right = value_of(sys, t.right_end);
  const double w = 1000, h = 120, margin = 20;
  auto xpos = [&](long double v) {
    double x = static_cast<double>(v / right) * (w - 2 * margin);
    return mirror ? w - margin - x : margin + x;
  };
  out << std::setprecision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (std::size_t i = 0; i < t.types.size(); ++i) {
    long double lo = value_of(sys, t.left[i]);
    long double hi = i + 1 < t.types.size() ? value_of(sys, t.left[i + 1]) : right;
    double x0 = xpos(lo), x1 = xpos(hi);
    if (x0 > x1) std::swap(x0, x1);
    out << "  <rect x=\"" << x0 << "\" y=\"40\" width=\"" << x1 - x0 << "\" height=\"30\" fill=\""
        << hex(letter_color(t.types[i])) << "\" stroke=\"black\" stroke-width=\"0.5\"><title>" << t.types[i]
        << "</title></rect>\n";
  }
  out << "  <text x=\"" << xpos(0) << "\" y=\"90\" font-size=\"12\">0</text>\n";
  out << "  <text x=\"" << xpos(right) << "\" y=\"90\" font-size=\"12\">" << sys.eigen().pair(t.right_end).to_string()
      << "</text>\n</svg>\n";
}

void write_stepped_svg(std::ostream& out, const System& sys, const std::vector<SteppedFace>& faces, bool mirror) {
  // Horizontal: the expanding real coordinate, one basic interval per face.
  // Vertical: the first coordinate of K_sigma (p-adic places through the
  // Euclidean model).
  const auto& space = sys.space();
  struct Box {
    double x0, x1, y;
    Letter a;
  };
  std::vector<Box> boxes;
  for (auto& f : faces) {
    long double x = f.face.x.approx(), len = sys.delta_letter(f.face.letter).approx();
    long double y;
    if (!space.arch().empty()) {
      y = space.arch_value(f.face.x, 0).real();
    } else {
      y = coefficient_model(embed_padic(f.face.x, space.padic(0)), 12);
      if (space.padic(0).digit_model()) {
        auto z = embed_padic(f.face.x, space.padic(0));
        auto v = z.valuation();
        int first = v ? std::min(*v, 0) : 0;
        AlphaDigits d = alpha_digits(z, 16 - first);
        long double n = to_long_double(space.padic(0).residue_norm());
        y = euclidean_model(d, n);
      }
    }
    boxes.push_back({static_cast<double>(x), static_cast<double>(x + len), static_cast<double>(y), f.face.letter});
  }
  double xl = 0, xh = 1, yl = 0, yh = 1;
  if (!boxes.empty()) {
    xl = boxes[0].x0, xh = boxes[0].x1, yl = yh = boxes[0].y;
    for (auto& b : boxes) xl = std::min(xl, b.x0), xh = std::max(xh, b.x1), yl = std::min(yl, b.y), yh = std::max(yh, b.y);
  }
  const double w = 800, h = 600, m = 30, bar = 6;
  double sx = (w - 2 * m) / std::max(xh - xl, 1e-9), sy = (h - 2 * m) / std::max(yh - yl, 1e-9);
  out << std::setprecision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (auto& b : boxes) {
    double x0 = m + (b.x0 - xl) * sx, x1 = m + (b.x1 - xl) * sx;
    if (mirror) x0 = w - x0, x1 = w - x1;
    if (x0 > x1) std::swap(x0, x1);
    double y = h - m - (b.y - yl) * sy;
    out << "  <rect x=\"" << x0 << "\" y=\"" << y - bar / 2 << "\" width=\"" << x1 - x0 << "\" height=\"" << bar
        << "\" fill=\"" << hex(letter_color(b.a)) << "\" fill-opacity=\"0.7\" stroke=\"black\" stroke-width=\"0.3\"/>\n";
  }
  out << "</svg>\n";
}

void write_graph_dot(std::ostream& out, const System& sys, const ZeroGraph& g) {
  (void)sys;
  out << "digraph zero_expansion {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"(" << g.nodes[i].x.to_string() << ", " << g.nodes[i].letter << ")\""
        << (g.nodes[i].x.is_zero() ? "" : ", color=red") << "];\n";
  for (std::size_t i = 0; i < g.adjacency.size(); ++i)
    for (std::size_t j : g.adjacency[i]) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
}

}  // namespace rauzy
