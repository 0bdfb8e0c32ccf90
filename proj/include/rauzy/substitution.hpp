#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/matrix.hpp"

namespace rauzy {

using Letter = int;  // 1-based
using Word = std::vector<Letter>;

std::string word_to_string(const Word& w);

class Substitution {
 public:
  // Validates: non-empty images, letters in 1..n, some image grows under iteration.
  explicit Substitution(std::vector<Word> images);

  int size() const { return static_cast<int>(images_.size()); }
  const Word& image(Letter a) const { return images_[a - 1]; }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;
  // sigma^k(w); throws ResourceCap when the result would exceed `cap` letters.
  Word iterate(const Word& w, int k, std::size_t cap = 100'000'000) const;
  Substitution power(int k) const;

  std::string to_string() const;
  bool operator==(const Substitution& o) const { return images_ == o.images_; }

 private:
  std::vector<Word> images_;
};

// Grammar: "1->121;2->11", "1->1^5 2;2->1^3". Inside an image each digit is a
// letter; `{12}` writes a multi-digit letter; `x^k` repeats the preceding letter.
Substitution parse_substitution(std::string_view text);

std::vector<std::int64_t> abelianize(const Word& w, int n);
IntMatrix incidence_matrix(const Substitution& s);
bool is_primitive(const IntMatrix& m);
// Spectral radius > 1, decided combinatorially on the strongly connected components.
bool has_growth(const IntMatrix& m);

struct AutomatonEdge {
  Letter from;
  Word prefix;
  Letter to;
  Word suffix;
};

class PrefixAutomaton {
 public:
  explicit PrefixAutomaton(const Substitution& s);

  int size() const { return n_; }
  const std::vector<AutomatonEdge>& edges() const { return edges_; }
  const AutomatonEdge& edge(std::size_t i) const { return edges_[i]; }
  // Edge indices, in (from, position) order.
  const std::vector<std::size_t>& into(Letter a) const { return into_[a - 1]; }
  const std::vector<std::size_t>& out_of(Letter b) const { return out_[b - 1]; }
  // Target of the unique empty-prefix edge leaving b.
  Letter first_letter(Letter b) const { return edges_[out_[b - 1].front()].to; }

 private:
  int n_;
  std::vector<AutomatonEdge> edges_;
  std::vector<std::vector<std::size_t>> into_, out_;
};

inline PrefixAutomaton prefix_automaton(const Substitution& s) { return PrefixAutomaton(s); }

struct CoincidenceVerdict {
  bool holds = false;
  int k = 0;              // max over pairs of the minimal witnessing power
  int k_max = 0;
  std::string reason;     // set when not detected
};

CoincidenceVerdict strong_coincidence(const Substitution& s, int k_max = 8, std::size_t word_cap = 1'000'000);

struct PeriodicSeed {
  Letter letter;
  int period;
};

PeriodicSeed periodic_point_seed(const Substitution& s);
Word fixed_point_prefix(const Substitution& s, Letter a, std::size_t len);

struct PrefixSuffixDigit {
  Word prefix;
  Letter letter;
  Word suffix;
  bool operator==(const PrefixSuffixDigit&) const = default;
};

// Index 0 is the innermost digit.
using DevelopmentSequence = std::vector<PrefixSuffixDigit>;

DevelopmentSequence position_development(const Substitution& s, Letter a, std::uint64_t j, int depth);
// Throws Validation ("needs longer truncation") when every suffix is empty.
DevelopmentSequence adic_successor(const Substitution& s, const DevelopmentSequence& d);
bool is_valid_development(const Substitution& s, const DevelopmentSequence& d);

}  // namespace rauzy
