#include "rauzy/report.hpp"

#include "rauzy/embedding.hpp"
#include "rauzy/polynomial.hpp"

namespace rauzy {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (auto& q : v) a.push_back(q.get_str());
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

Json poly_json(const IntPoly& f) {
  Json c = Json::array();
  for (auto& x : f) c.push_back(x.get_str());
  return {{"text", poly_to_string(f)}, {"coefficients_low_to_high", c}};
}

Json word_json(const Word& w) { return word_to_string(w); }

double fl(long double x) { return static_cast<double>(x); }

Json complex_json(Complex z) { return Json::array({fl(z.real()), fl(z.imag())}); }

}  // namespace

Json number_json(const System& sys, const AlgebraicNumber& x) {
  return {{"exact", x.to_string()},
          {"power_basis", rationals(x.coeffs())},
          {"v_coordinates", rationals(sys.eigen().v_coordinates(x))},
          {"approx", fl(x.approx())}};
}

Json face_json(const System& sys, const Face& f) {
  Json j = number_json(sys, f.x);
  j["letter"] = f.letter;
  return j;
}

Json embedded_json(const System& sys, const AlgebraicNumber& x) {
  const auto& space = sys.space();
  Json arch = Json::array();
  for (std::size_t p = 0; p < space.arch().size(); ++p) arch.push_back(complex_json(space.arch_value(x, p)));
  Json val = Json::array();
  for (std::size_t i = 0; i < space.padic_count(); ++i) {
    auto v = exact_valuation(x, space.padic(i));
    val.push_back(v ? Json(*v) : Json(nullptr));
  }
  return {{"archimedean", arch}, {"valuations", val}};
}

Json analysis_report(const System& sys, bool with_property_f) {
  const auto& space = sys.space();
  Json r;
  r["substitution"] = sys.original().to_string();
  IntMatrix m0 = incidence_matrix(sys.original());
  r["incidence_matrix"] = matrix_json(m0);
  r["characteristic_polynomial"] = poly_json(char_poly(m0));
  r["periodic_seed"] = {{"letter", sys.seed_letter()}, {"period", sys.power()}};
  r["working_power"] = sys.power();
  if (sys.power() > 1) {
    r["working_substitution"] = sys.substitution().to_string();
    r["working_matrix"] = matrix_json(sys.matrix());
  }
  r["minimal_polynomial"] = poly_json(sys.minpoly());
  r["flags"] = {{"primitive", true}, {"irreducible", true}, {"pisot", sys.pisot().pisot}, {"unit", sys.pisot().unit}};
  const auto& enc = sys.field().alpha_enclosure();
  r["alpha"] = {{"approx", fl(sys.field().alpha_approx())},
                {"enclosure", {{"lo_numerator", enc.lo.get_str()}, {"denominator_log2", enc.bits}}}};
  Json conj = Json::array();
  for (auto& p : space.arch()) conj.push_back({{"root", complex_json(p.root)}, {"complex", p.is_complex}});
  r["archimedean_places"] = conj;
  Json v = Json::array(), u = Json::array();
  for (auto& x : sys.eigen().left()) v.push_back(number_json(sys, x));
  for (auto& x : sys.eigen().right()) u.push_back(number_json(sys, x));
  r["eigenvectors"] = {{"normalization", sys.eigen().normalization().describe(sys.size())}, {"left", v}, {"right", u}};
  Json edges = Json::array();
  for (auto& e : sys.automaton().edges())
    edges.push_back({{"from", e.from}, {"prefix", word_json(e.prefix)}, {"to", e.to}, {"suffix", word_json(e.suffix)}});
  r["prefix_automaton"] = {{"vertices", sys.size()}, {"edges", edges}};
  Json digits = Json::array();
  for (std::size_t i = 0; i < sys.digits().values.size(); ++i) {
    Json d = number_json(sys, sys.digits().values[i]);
    Json pre = Json::array();
    for (std::size_t e : sys.digits().edges[i]) pre.push_back(word_json(sys.automaton().edge(e).prefix));
    d["prefixes"] = pre;
    digits.push_back(d);
  }
  r["digit_set"] = digits;
  Json padic = Json::array();
  for (std::size_t i = 0; i < space.padic_count(); ++i) {
    const auto& ring = space.padic(i);
    Json reps = Json::array();
    for (auto& x : ring.representatives()) reps.push_back(x.get_str());
    Json segs = Json::array();
    for (auto& s : ring.polygon().segments) segs.push_back({{"slope", s.slope.get_str()}, {"length", s.length}});
    Json fac = Json::array();
    for (auto& c : ring.factor()) fac.push_back(c.get_str());
    padic.push_back({{"prime", ring.prime().get_str()},
                     {"newton_polygon", segs},
                     {"alpha_factor_mod_p^N", fac},
                     {"degree", ring.degree()},
                     {"e", ring.ramification()},
                     {"f", ring.inertia()},
                     {"residue_norm", ring.residue_norm().get_str()},
                     {"alpha_valuation", ring.alpha_valuation()},
                     {"uniformiser", ring.uniformiser()},
                     {"precision", ring.precision()},
                     {"representatives", reps},
                     {"index-divisibility-unverified", ring.index_unverified()},
                     {"d_p", sys.d_p()[i]}});
  }
  auto cert = contraction_certificate(space);
  Json cols = Json::array();
  for (auto& c : space.column_names()) cols.push_back(c);
  r["representation_space"] = {{"layout", space.layout()},
                               {"columns", cols},
                               {"padic_places", padic},
                               {"contraction_product", fl(cert.product)},
                               {"contraction_deviation", fl(cert.deviation)},
                               {"ball_radius_M", fl(bound_M(space, sys.digits()))}};
  const auto& sc = sys.coincidence();
  r["strong_coincidence"] = sc.holds ? Json{{"verdict", "holds"}, {"k", sc.k}}
                                     : Json{{"verdict", "not-detected"}, {"k_max", sc.k_max}, {"reason", sc.reason}};
  if (with_property_f) {
    ZeroGraph g = zero_expansion_graph(sys);
    r["property_F"] = verdict_json(sys, check_property_F(sys, g));
  }
  return r;
}

Json expansion_json(const System& sys, const AlgebraicNumber& x, const Expansion& e) {
  Json digits = Json::array();
  auto values = e.digit_values(sys);
  for (std::size_t i = 0; i < e.edges.size(); ++i) {
    const auto& edge = sys.automaton().edge(e.edges[i]);
    Json d = number_json(sys, values[i]);
    d["symbol"] = digit_symbol(sys, e.edges[i]);
    d["edge"] = {{"from", edge.from}, {"prefix", word_json(edge.prefix)}, {"to", edge.to}};
    digits.push_back(d);
  }
  return {{"x", number_json(sys, x)},
          {"letter", e.letter},
          {"letter_tie", e.letter_tie},
          {"kind", kind_name(e.kind)},
          {"integer_digits", e.integer_digits},
          {"preperiod", e.preperiod},
          {"period", e.period},
          {"expansion", e.to_string(sys)},
          {"digits", digits}};
}

Json graph_json(const System& sys, const ZeroGraph& g) {
  Json nodes = Json::array(), edges = Json::array();
  for (auto& f : g.nodes) nodes.push_back(face_json(sys, f));
  for (std::size_t i = 0; i < g.adjacency.size(); ++i)
    for (std::size_t j : g.adjacency[i]) edges.push_back(Json::array({i, j}));
  return {{"untrimmed_nodes", g.untrimmed_nodes},
          {"untrimmed_edges", g.untrimmed_edges},
          {"trimmed", true},
          {"nodes", nodes},
          {"edges", edges}};
}

Json verdict_json(const System& sys, const FVerdict& v) {
  Json w = Json::array(), inf = Json::array();
  for (auto& f : v.witnesses) w.push_back(face_json(sys, f));
  for (auto& f : v.infinite_expansion) inf.push_back(face_json(sys, f));
  return {{"verdict", v.holds ? "holds" : "fails"},
          {"conclusive", v.conclusive},
          {"witnesses", w},
          {"infinite_expansion_witnesses", inf}};
}

Json covering_json(const CoveringResult& r, const CoveringOptions& o) {
  Json h = Json::object();
  for (auto& [k, c] : r.histogram) h[std::to_string(k)] = c;
  Json center = Json::array();
  for (auto c : o.center) center.push_back(fl(c));
  return {{"samples", r.samples},
          {"seed", o.seed},
          {"level", r.level},
          {"check_level", r.check_level},
          {"window", {{"center", center}, {"half_width", fl(o.half_width)}}},
          {"candidate_faces", r.candidate_faces},
          {"histogram", h},
          {"ambiguous", r.ambiguous},
          {"modal_degree", r.modal_degree},
          {"modal_fraction", r.samples ? static_cast<double>(r.modal_count) / r.samples : 0.0},
          {"min_degree", r.min_degree},
          {"uncovered", r.uncovered},
          {"resolution", fl(r.resolution)}};
}

Json error_json(const Error& e) { return {{"error", {{"kind", e.kind_name()}, {"message", e.what()}}}}; }

}  // namespace rauzy
