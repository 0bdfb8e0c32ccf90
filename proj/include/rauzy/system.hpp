#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rauzy/embedding.hpp"

namespace rauzy {

struct SystemOptions {
  EigenNormalization normalization;
  int padic_precision = 64;
  int coincidence_k_max = 8;
};

// Everything derived from one substitution: the (possibly powered) substitution,
// its number field, eigenvectors, prefix automaton, digits and K_sigma.
class System {
 public:
  explicit System(const Substitution& original, const SystemOptions& options = {});
  static std::unique_ptr<System> parse(const std::string& text, const SystemOptions& options = {});
  System(const System&) = delete;
  System& operator=(const System&) = delete;

  const Substitution& original() const { return original_; }
  const Substitution& substitution() const { return sub_; }
  int power() const { return seed_.period; }
  Letter seed_letter() const { return seed_.letter; }
  int size() const { return sub_.size(); }

  const IntMatrix& matrix() const { return m_; }
  const IntPoly& minpoly() const { return f_; }
  const PisotVerdict& pisot() const { return pisot_; }
  const NumberField& field() const { return *field_; }
  const EigenData& eigen() const { return *eigen_; }
  const PrefixAutomaton& automaton() const { return *automaton_; }
  const DigitSet& digits() const { return digits_; }
  const RepresentationSpace& space() const { return *space_; }
  const CoincidenceVerdict& coincidence() const { return coincidence_; }
  const std::vector<int>& d_p() const { return d_p_; }

  // delta of the prefix of edge e, and its abelianisation.
  const AlgebraicNumber& edge_delta(std::size_t e) const { return edge_delta_[e]; }
  const std::vector<std::int64_t>& edge_prefix_vector(std::size_t e) const { return edge_prefix_[e]; }
  const AlgebraicNumber& delta_letter(Letter a) const { return eigen_->left()[a - 1]; }

  // 0 <= x < delta(a)
  bool in_range(const AlgebraicNumber& x, Letter a) const;
  AlgebraicNumber parse_element(const std::string& text) const;

 private:
  Substitution original_;
  PeriodicSeed seed_;
  Substitution sub_;
  IntMatrix m_;
  IntPoly f_;
  PisotVerdict pisot_;
  std::unique_ptr<NumberField> field_;
  std::unique_ptr<EigenData> eigen_;
  std::unique_ptr<PrefixAutomaton> automaton_;
  DigitSet digits_;
  std::unique_ptr<RepresentationSpace> space_;
  CoincidenceVerdict coincidence_;
  std::vector<int> d_p_;
  std::vector<AlgebraicNumber> edge_delta_;
  std::vector<std::vector<std::int64_t>> edge_prefix_;
};

}  // namespace rauzy
