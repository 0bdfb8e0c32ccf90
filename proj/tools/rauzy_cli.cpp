// Command-line front end. Every subcommand writes JSON (or the requested
// artifact) to --out or stdout; failures print {"error": ...} and exit with
// 2 (validation), 3 (resource cap) or 4 (precision).
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "rauzy/analysis.hpp"
#include "rauzy/render.hpp"
#include "rauzy/report.hpp"

using namespace rauzy;

namespace {

struct Common {
  std::string sub;
  std::string norm;
  int precision = 64;
  std::string format;
  std::string out;
  int threads = 0;
  std::uint64_t seed = 1;
  bool mirror = false;
};

std::unique_ptr<System> load(const Common& c) {
  SystemOptions o;
  if (!c.norm.empty()) o.normalization = EigenNormalization::parse(c.norm);
  o.padic_precision = c.precision;
  return System::parse(c.sub, o);
}

void emit_text(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) fail(ErrorKind::Validation, "cannot open " + c.out);
  f << text;
}

void emit_json(const Common& c, const Json& j) { emit_text(c, j.dump(2) + "\n"); }

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (c.format == a) return;
  std::string list;
  for (auto a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  fail(ErrorKind::Validation, "format '" + c.format + "' not available here (use " + list + ")");
}

void emit_png(const Common& c, const Raster& r, Json summary) {
  if (c.out.empty() || c.out == "-") fail(ErrorKind::Validation, "png output needs --out");
  write_png(c.out, r);
  summary["png"] = {{"path", c.out}, {"width", r.width}, {"height", r.height}, {"plotted_points", r.plotted},
                    {"extent", {static_cast<double>(r.extent.x_lo), static_cast<double>(r.extent.x_hi),
                                static_cast<double>(r.extent.y_lo), static_cast<double>(r.extent.y_hi)}}};
  std::cout << summary.dump(2) << "\n";
}

std::vector<Letter> letters_of(const System& sys, int letter) {
  if (letter < 0 || letter > sys.size()) fail(ErrorKind::Validation, "letter out of range");
  std::vector<Letter> ls;
  for (Letter a = 1; a <= sys.size(); ++a)
    if (letter == 0 || letter == a) ls.push_back(a);
  return ls;
}

Json cloud_summary(const System& sys, const std::vector<TileApproximation>& clouds) {
  Json arr = Json::array();
  for (auto& t : clouds) {
    EmbeddedPoint worst;
    long double max_norm = 0;
    std::vector<int> min_val(sys.space().padic_count(), std::numeric_limits<int>::max());
    // norms and valuations from a bounded sample keep this cheap on large clouds
    std::size_t step = std::max<std::size_t>(1, t.points.size() / 2000);
    for (std::size_t k = 0; k < t.points.size(); k += step) {
      auto x = t.points.value(sys.eigen(), k);
      auto z = phi_prime(x, sys.space());
      max_norm = std::max(max_norm, norm(z, sys.space()));
      for (std::size_t i = 0; i < z.valuation.size(); ++i)
        if (z.valuation[i]) min_val[i] = std::min(min_val[i], *z.valuation[i]);
    }
    Json mv = Json::array();
    for (int v : min_val) mv.push_back(v == std::numeric_limits<int>::max() ? Json(nullptr) : Json(v));
    arr.push_back({{"letter", t.letter},
                   {"level", t.level},
                   {"walks", t.walk_count},
                   {"distinct_points", t.points.size()},
                   {"sampled_max_norm", static_cast<double>(max_norm)},
                   {"sampled_min_valuation", mv}});
  }
  return {{"layout", sys.space().layout()},
          {"ball_radius_M", static_cast<double>(bound_M(sys.space(), sys.digits()))},
          {"clouds", arr}};
}

void render_clouds(const Common& c, const System& sys, const std::vector<TileApproximation>& clouds,
                   const std::vector<const AlgebraicNumber*>& translations, const std::vector<int>& tindex,
                   const std::vector<const TileApproximation*>& which, Json summary, int width) {
  CloudEmbedder emb(sys.space(), sys.eigen());
  (void)clouds;
  std::vector<std::vector<long double>> rows;
  for (std::size_t i = 0; i < which.size(); ++i) rows.push_back(embed_cloud(sys, emb, which[i]->points, translations[i]));
  if (c.format == "csv") {
    std::ostringstream s;
    write_cloud_csv(s, sys, emb, which, tindex, rows);
    emit_text(c, s.str());
    return;
  }
  std::vector<PlotLayer> layers;
  for (std::size_t i = 0; i < which.size(); ++i) layers.push_back({rows[i], letter_color(which[i]->letter)});
  PlotOptions po;
  po.width = po.height = width;
  po.mirror = c.mirror;
  emit_png(c, rasterize(layers, emb.columns(), po), std::move(summary));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rauzy fractals, Dumont-Thomas numeration and property (F) for Pisot substitutions"};
  app.require_subcommand(1);
  Common c;
  int letter = 0, level = 10, render_level = 8, integer_level = 4, depth = 0, samples = 10000, width = 1024;
  double window = 1.0;
  std::string x_text, dot_path;
  std::size_t max_digits = 100000;

  std::map<CLI::App*, std::string> default_format;
  auto common = [&](CLI::App* s, const std::string& fmt) {
    default_format[s] = fmt;
    s->add_option("--sub", c.sub, "substitution, e.g. \"1->1^5 2;2->1^3\"")->required();
    s->add_option("--eigenvector-norm", c.norm, "normalization of the left eigenvector, e.g. \"v2=1\"");
    s->add_option("--precision", c.precision, "p-adic working precision in digits")->check(CLI::Range(8, 4096));
    s->add_option("--format", c.format, "json, csv, png, svg or dot");
    s->add_option("--out", c.out, "output file (stdout when omitted)");
  };

  auto* analyze = app.add_subcommand("analyze", "substitution, field, eigenvectors, digits, K_sigma, verdicts");
  common(analyze, "json");

  auto* expand_cmd = app.add_subcommand("expand", "(sigma,a)-expansion of x; real expansion without --letter");
  common(expand_cmd, "json");
  expand_cmd->add_option("--x", x_text, "element of Q(a), a the working Pisot root, e.g. \"(a-1)/3\"")->required();
  expand_cmd->add_option("--letter", letter, "state letter (0: choose the smallest admissible)");
  expand_cmd->add_option("--depth", max_digits, "maximal number of digits");

  auto* integers = app.add_subcommand("integers", "sigma-integer level sets and classification");
  common(integers, "json");
  integers->add_option("--x", x_text, "element to classify");
  integers->add_option("--letter", letter, "letter (0: all)");
  integers->add_option("--level", integer_level, "level k of Z^(k)_{sigma,a}")->check(CLI::Range(0, 40));

  auto* rtile = app.add_subcommand("render-tile", "subtile point clouds alpha^k T_ext^-k(0,a)");
  common(rtile, "png");
  rtile->add_option("--letter", letter, "letter (0: the whole central tile)");
  rtile->add_option("--level", render_level, "level k")->check(CLI::Range(0, 60));
  rtile->add_option("--width", width, "raster size in pixels");
  rtile->add_flag("--mirror", c.mirror, "flip the horizontal axis");

  auto* rtiling = app.add_subcommand("render-tiling", "tiles R(a)+gamma for the translation set in a ball");
  common(rtiling, "png");
  rtiling->add_option("--level", render_level, "cloud level")->check(CLI::Range(0, 60));
  rtiling->add_option("--window", window, "ball radius in K_sigma");
  rtiling->add_option("--width", width, "raster size in pixels");
  rtiling->add_flag("--mirror", c.mirror, "flip the horizontal axis");

  auto* rline = app.add_subcommand("render-line", "natural-interval tiling of the line");
  common(rline, "svg");
  rline->add_option("--depth", depth, "inflation depth")->check(CLI::Range(0, 30));
  rline->add_flag("--mirror", c.mirror, "flip the horizontal axis");

  auto* rstep = app.add_subcommand("render-stepped", "stepped-surface faces in a ball, or T_ext^-k(U) with --depth");
  common(rstep, "svg");
  rstep->add_option("--window", window, "ball radius in K_sigma");
  rstep->add_option("--depth", depth, "iterate T_ext^-1 on U this many times instead")->check(CLI::Range(0, 30));
  rstep->add_flag("--mirror", c.mirror, "flip the horizontal axis");

  auto* dex = app.add_subcommand("domain-exchange", "subtiles before and after z -> z + delta(a)");
  common(dex, "png");
  dex->add_option("--level", render_level, "cloud level")->check(CLI::Range(0, 60));
  dex->add_option("--width", width, "raster size in pixels");
  dex->add_flag("--mirror", c.mirror, "flip the horizontal axis");

  auto* gz = app.add_subcommand("graph-zero", "trimmed zero-expansion graph");
  common(gz, "json");
  gz->add_option("--dot", dot_path, "also write the graph in DOT format");

  auto* cf = app.add_subcommand("check-f", "decide the geometric property (F)");
  common(cf, "json");

  auto* cov = app.add_subcommand("covering", "Monte-Carlo covering-degree estimate");
  common(cov, "json");
  cov->add_option("--samples", samples, "number of samples")->check(CLI::Range(1, 100000000));
  cov->add_option("--level", level, "subdivision level")->check(CLI::Range(0, 40));
  cov->add_option("--window", window, "half width of the sampling box");
  cov->add_option("--seed", c.seed, "RNG seed");
  cov->add_option("--threads", c.threads, "worker threads (0: all cores)");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      fail(ErrorKind::Validation, e.what());
    }
    for (auto& [s, fmt] : default_format)
      if (s->parsed() && c.format.empty()) c.format = fmt;
    auto sys = load(c);

    if (analyze->parsed()) {
      require_format(c, {"json"});
      emit_json(c, analysis_report(*sys, true));
    } else if (expand_cmd->parsed()) {
      require_format(c, {"json"});
      AlgebraicNumber x = sys->parse_element(x_text);
      Expansion e;
      if (letter == 0) {
        e = expand_real(*sys, x, max_digits);
      } else {
        letters_of(*sys, letter);
        if (!frac_membership(*sys, x, letter) && !sys->in_range(x, letter))
          fail(ErrorKind::Validation, "x is outside [0, delta(letter))");
        e = expand(*sys, x, letter, max_digits);
      }
      emit_json(c, expansion_json(*sys, x, e));
    } else if (integers->parsed()) {
      require_format(c, {"json"});
      Json j;
      Json sets = Json::array();
      for (Letter a : letters_of(*sys, letter)) {
        auto pts = sigma_integer_level(*sys, a, integer_level);
        std::vector<AlgebraicNumber> vals;
        for (auto& p : pts) vals.push_back(p.value);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        Json arr = Json::array();
        for (auto& v : vals) arr.push_back(number_json(*sys, v));
        sets.push_back({{"letter", a}, {"level", integer_level}, {"walks", pts.size()}, {"points", arr}});
      }
      j["levels"] = sets;
      if (!x_text.empty()) {
        AlgebraicNumber x = sys->parse_element(x_text);
        Json cls = Json::array();
        for (Letter a : letters_of(*sys, letter)) {
          Json lv = Json::array();
          for (int k = 0; k <= integer_level; ++k) lv.push_back(in_sigma_integer_level(*sys, x, a, k));
          cls.push_back({{"letter", a}, {"sigma_integer", is_sigma_integer(*sys, x, a)}, {"in_level", lv}});
        }
        j["x"] = number_json(*sys, x);
        j["classification"] = cls;
      }
      emit_json(c, j);
    } else if (rtile->parsed()) {
      require_format(c, {"png", "csv", "json"});
      std::vector<TileApproximation> clouds;
      for (Letter a : letters_of(*sys, letter)) clouds.push_back(subtile_cloud(*sys, a, render_level));
      Json summary = cloud_summary(*sys, clouds);
      if (c.format == "json") {
        emit_json(c, summary);
      } else {
        std::vector<const TileApproximation*> which;
        std::vector<const AlgebraicNumber*> tr;
        std::vector<int> idx;
        for (auto& t : clouds) which.push_back(&t), tr.push_back(nullptr), idx.push_back(0);
        render_clouds(c, *sys, clouds, tr, idx, which, summary, width);
      }
    } else if (rtiling->parsed()) {
      require_format(c, {"png", "csv", "json"});
      GammaBall ball = gamma_in_ball(*sys, window);
      std::vector<TileApproximation> clouds;
      for (Letter a = 1; a <= sys->size(); ++a) clouds.push_back(subtile_cloud(*sys, a, render_level));
      Json faces = Json::array();
      for (auto& f : ball.faces) faces.push_back(face_json(*sys, f));
      Json summary = {{"layout", sys->space().layout()},
                      {"radius", window},
                      {"stable_level", ball.certificate.stable_level},
                      {"faces", faces}};
      if (c.format == "json") {
        emit_json(c, summary);
      } else {
        std::vector<const TileApproximation*> which;
        std::vector<const AlgebraicNumber*> tr;
        std::vector<int> idx;
        for (std::size_t i = 0; i < ball.faces.size(); ++i) {
          which.push_back(&clouds[ball.faces[i].letter - 1]);
          tr.push_back(&ball.faces[i].x);
          idx.push_back(static_cast<int>(i));
        }
        render_clouds(c, *sys, clouds, tr, idx, which, summary, width);
      }
    } else if (rline->parsed()) {
      require_format(c, {"svg", "json"});
      LineTiling t = line_tiling(*sys, depth);
      if (c.format == "svg") {
        std::ostringstream s;
        write_line_svg(s, *sys, t, c.mirror);
        emit_text(c, s.str());
      } else {
        Json iv = Json::array();
        for (std::size_t i = 0; i < t.types.size(); ++i)
          iv.push_back({{"type", t.types[i]}, {"left", number_json(*sys, sys->eigen().pair(t.left[i]))}});
        emit_json(c, {{"depth", t.depth},
                      {"seed", t.seed},
                      {"types", word_to_string(t.types)},
                      {"right_end", number_json(*sys, sys->eigen().pair(t.right_end))},
                      {"intervals", iv}});
      }
    } else if (rstep->parsed()) {
      require_format(c, {"svg", "json"});
      std::vector<Face> faces;
      if (depth > 0) {
        faces = u_iterates(*sys, depth).back();
      } else {
        faces = gamma_in_ball(*sys, window).faces;
      }
      auto stepped = stepped_faces(*sys, faces);
      if (c.format == "svg") {
        std::ostringstream s;
        write_stepped_svg(s, *sys, stepped, c.mirror);
        emit_text(c, s.str());
      } else {
        Json arr = Json::array();
        for (auto& f : stepped) {
          Json j = face_json(*sys, f.face);
          j["spans"] = f.spans;
          j["embedding"] = embedded_json(*sys, f.face.x);
          arr.push_back(j);
        }
        emit_json(c, {{"faces", arr}, {"count", stepped.size()}});
      }
    } else if (dex->parsed()) {
      require_format(c, {"png", "json"});
      std::vector<TileApproximation> clouds;
      for (Letter a = 1; a <= sys->size(); ++a) clouds.push_back(subtile_cloud(*sys, a, render_level));
      Json summary = cloud_summary(*sys, clouds);
      if (c.format == "json") {
        emit_json(c, summary);
      } else {
        CloudEmbedder emb(sys->space(), sys->eigen());
        auto after = domain_exchange(*sys, clouds);
        std::vector<PlotLayer> layers;
        long double lo = INFINITY, hi = -INFINITY;
        std::vector<std::vector<long double>> before_rows;
        for (auto& t : clouds) {
          before_rows.push_back(embed_cloud(*sys, emb, t.points));
          for (std::size_t k = 0; k < t.points.size(); ++k) {
            lo = std::min(lo, before_rows.back()[k * emb.columns()]);
            hi = std::max(hi, before_rows.back()[k * emb.columns()]);
          }
        }
        // second panel to the right of the first
        long double offset = (hi - lo) * 1.15L;
        for (std::size_t i = 0; i < clouds.size(); ++i) {
          layers.push_back({before_rows[i], letter_color(clouds[i].letter)});
          auto rows = embed_cloud(*sys, emb, after[i]);
          for (std::size_t k = 0; k < after[i].size(); ++k) rows[k * emb.columns()] += offset;
          layers.push_back({rows, letter_color(clouds[i].letter)});
        }
        PlotOptions po;
        po.width = 2 * width;
        po.height = width;
        po.mirror = c.mirror;
        emit_png(c, rasterize(layers, emb.columns(), po), summary);
      }
    } else if (gz->parsed()) {
      require_format(c, {"json", "dot"});
      ZeroGraph g = zero_expansion_graph(*sys);
      std::ostringstream dot;
      write_graph_dot(dot, *sys, g);
      if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) fail(ErrorKind::Validation, "cannot open " + dot_path);
        f << dot.str();
      }
      if (c.format == "dot")
        emit_text(c, dot.str());
      else
        emit_json(c, graph_json(*sys, g));
    } else if (cf->parsed()) {
      require_format(c, {"json"});
      ZeroGraph g = zero_expansion_graph(*sys);
      Json j = verdict_json(*sys, check_property_F(*sys, g));
      j["graph_nodes"] = g.nodes.size();
      j["strong_coincidence"] = sys->coincidence().holds;
      emit_json(c, j);
    } else if (cov->parsed()) {
      require_format(c, {"json"});
      CoveringOptions o;
      o.samples = static_cast<std::size_t>(samples);
      o.level = level;
      o.check_level = std::max(level, 20);
      o.seed = c.seed;
      o.threads = static_cast<unsigned>(c.threads);
      o.half_width = window;
      emit_json(c, covering_json(covering_degree_estimate(*sys, o), o));
    }
  } catch (const Error& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cout << error_json(Error(ErrorKind::Internal, e.what())).dump(2) << "\n";
    return 1;
  }
  return 0;
}
