#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rauzy/system.hpp"

namespace rauzy {

struct State {
  AlgebraicNumber x;
  Letter letter;
  bool operator==(const State& o) const { return letter == o.letter && x == o.x; }
};

struct StateHash {
  std::size_t operator()(const State& s) const { return hash_combine(s.x.hash(), static_cast<std::size_t>(s.letter)); }
};

struct Transition {
  State next;
  std::size_t edge;  // automaton edge whose prefix is the emitted digit
};

// One step of the numeration map; the state must satisfy 0 <= x < delta(letter).
Transition t_sigma(const System& sys, const State& st);

enum class ExpansionKind { Finite, EventuallyPeriodic, Truncated };
std::string kind_name(ExpansionKind k);

struct Expansion {
  Letter letter = 1;          // letter of the starting state
  int integer_digits = 0;     // digits before the radix point
  std::vector<std::size_t> edges;
  ExpansionKind kind = ExpansionKind::Truncated;
  // Of the digit-value sequence after the radix point; for Finite, preperiod
  // is the number of digits before the zero tail and period is 1.
  int preperiod = 0;
  int period = 0;
  bool letter_tie = false;    // expand_real: several letters were admissible

  std::vector<AlgebraicNumber> digit_values(const System& sys) const;
  // e.g. ".δ(1)δ(1)(0δ(12))^ω" or "δ(1).0δ(12)"
  std::string to_string(const System& sys) const;
};

std::string digit_symbol(const System& sys, std::size_t edge);

// Expansion of x in [0, delta(a)); cycle detection on exact states.
Expansion expand(const System& sys, const AlgebraicNumber& x, Letter a, std::size_t max_digits = 1'000'000);
// Two-sided expansion of x >= 0: smallest m >= -1 and then smallest letter a
// with alpha^(-m-1) x in [0, delta(a)).
Expansion expand_real(const System& sys, const AlgebraicNumber& x, std::size_t max_digits = 1'000'000);

// Preimages (alpha^-1 (x + delta(p)), b) over edges b -p-> a, in edge order.
std::vector<State> t_inverse(const System& sys, const State& st);

struct LevelPoint {
  AlgebraicNumber value;          // sum_i delta(p_i) alpha^i
  Letter start;                   // first vertex of the walk
  std::vector<std::size_t> walk;  // walk[i] is the edge carrying alpha^i
};

// alpha^k T^-k(0, a) with witnessing walks. Pairs (value, start) are distinct.
std::vector<LevelPoint> sigma_integer_level(const System& sys, Letter a, int k, std::size_t cap = 10'000'000);
bool in_sigma_integer_level(const System& sys, const AlgebraicNumber& x, Letter a, int k);
bool is_sigma_integer(const System& sys, const AlgebraicNumber& x, Letter a);
// Letters lying on a cycle of the first-letter map.
std::vector<bool> first_letter_cycles(const System& sys);

bool frac_membership(const System& sys, const AlgebraicNumber& x, Letter a);
std::optional<std::vector<std::size_t>> finite_expansion(const System& sys, const AlgebraicNumber& x, Letter a,
                                                         std::size_t max_digits = 1'000'000);

// Checks that consecutive edges chain (edge i+1 ends where edge i starts).
bool is_admissible_walk(const System& sys, Letter a, const std::vector<std::size_t>& edges);

}  // namespace rauzy
