#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rauzy/numberfield.hpp"
#include "rauzy/substitution.hpp"

namespace rauzy {

// Which coordinate of the left eigenvector is pinned, and to what value.
struct EigenNormalization {
  int letter = 0;           // 0 means the last letter
  std::string value = "1";  // element expression
  // "last", "first", "<k>" or "<k>=<expr>", "last=<expr>"
  static EigenNormalization parse(const std::string& text);
  std::string describe(int n) const;
};

struct Membership {
  bool member = false;
  int exponent = 0;  // minimal L with alpha^L x in V
};

class EigenData {
 public:
  EigenData(const NumberField& field, const IntMatrix& m, const EigenNormalization& norm = {});

  const NumberField& field() const { return *field_; }
  const IntMatrix& matrix() const { return m_; }
  const RatMatrix& matrix_inverse() const { return minv_; }
  const std::vector<AlgebraicNumber>& left() const { return v_; }
  const std::vector<AlgebraicNumber>& right() const { return u_; }
  const EigenNormalization& normalization() const { return norm_; }
  int size() const { return m_.rows(); }

  AlgebraicNumber delta(const Word& w) const;
  AlgebraicNumber pair(const std::vector<std::int64_t>& counts) const;  // <counts, v>
  AlgebraicNumber from_v_coordinates(const std::vector<Rational>& c) const;
  std::vector<Rational> v_coordinates(const AlgebraicNumber& x) const;

  // x in V * Z[1/alpha]: iterate c -> M c on v-coordinates, with cycle detection
  // on residues modulo the starting denominator.
  Membership membership(const AlgebraicNumber& x, std::size_t state_cap = 10'000'000) const;

 private:
  const NumberField* field_;
  IntMatrix m_;
  RatMatrix minv_;
  EigenNormalization norm_;
  std::vector<AlgebraicNumber> v_, u_;
  RatMatrix to_v_;  // power-basis coefficients -> v-coordinates
};

struct DigitSet {
  std::vector<AlgebraicNumber> values;              // ascending
  std::vector<std::vector<std::size_t>> edges;      // automaton edges per value
  std::vector<std::size_t> value_of_edge;           // edge index -> value index
};

DigitSet digit_set(const PrefixAutomaton& automaton, const EigenData& eigen);

}  // namespace rauzy
