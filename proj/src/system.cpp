#include "rauzy/system.hpp"

#include "rauzy/error.hpp"

namespace rauzy {

System::System(const Substitution& original, const SystemOptions& options)
    : original_(original), seed_(periodic_point_seed(original)), sub_(original.power(seed_.period)) {
  IntMatrix m0 = incidence_matrix(original_);
  if (!is_primitive(m0)) fail(ErrorKind::Validation, "substitution is not primitive");
  IntPoly f0 = char_poly(m0);
  if (!is_irreducible_over_Q(f0))
    fail(ErrorKind::Validation, "characteristic polynomial " + poly_to_string(f0) + " is reducible");
  PisotVerdict v0 = is_pisot(f0);
  if (!v0.pisot) fail(ErrorKind::Validation, "not a Pisot substitution: " + v0.reason);
  m_ = incidence_matrix(sub_);
  f_ = char_poly(m_);
  pisot_ = is_pisot(f_);
  if (!pisot_.pisot || !is_irreducible_over_Q(f_)) fail(ErrorKind::Unsupported, "power of the substitution has a reducible characteristic polynomial");
  field_ = std::make_unique<NumberField>(f_, pisot_.dominant.real());
  eigen_ = std::make_unique<EigenData>(*field_, m_, options.normalization);
  automaton_ = std::make_unique<PrefixAutomaton>(sub_);
  digits_ = digit_set(*automaton_, *eigen_);
  space_ = std::make_unique<RepresentationSpace>(*field_, pisot_, options.padic_precision);
  coincidence_ = strong_coincidence(original_, options.coincidence_k_max);
  d_p_ = d_p_values(*eigen_, *space_);
  for (auto& e : automaton_->edges()) {
    edge_prefix_.push_back(abelianize(e.prefix, sub_.size()));
    edge_delta_.push_back(eigen_->pair(edge_prefix_.back()));
  }
}

std::unique_ptr<System> System::parse(const std::string& text, const SystemOptions& options) {
  return std::make_unique<System>(parse_substitution(text), options);
}

bool System::in_range(const AlgebraicNumber& x, Letter a) const {
  return x.sign() >= 0 && (x - delta_letter(a)).sign() < 0;
}

AlgebraicNumber System::parse_element(const std::string& text) const { return rauzy::parse_element(*field_, text); }

}  // namespace rauzy
