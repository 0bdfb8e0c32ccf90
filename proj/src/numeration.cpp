#include "rauzy/numeration.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rauzy/error.hpp"

namespace rauzy {

Transition t_sigma(const System& sys, const State& st) {
  const AlgebraicNumber t = st.x * sys.field().alpha();
  const auto& out = sys.automaton().out_of(st.letter);
  // cut points delta(prefix) increase along sigma(b); take the last one <= t
  std::size_t chosen = out.front();
  for (std::size_t e : out) {
    if ((t - sys.edge_delta(e)).sign() < 0) break;
    chosen = e;
  }
  const AutomatonEdge& edge = sys.automaton().edge(chosen);
  AlgebraicNumber y = t - sys.edge_delta(chosen);
  if (!sys.in_range(y, edge.to)) fail(ErrorKind::Internal, "numeration step left the fundamental interval");
  return {{y, edge.to}, chosen};
}

std::string kind_name(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::Finite: return "finite";
    case ExpansionKind::EventuallyPeriodic: return "eventually-periodic";
    case ExpansionKind::Truncated: return "truncated";
  }
  return "?";
}

std::vector<AlgebraicNumber> Expansion::digit_values(const System& sys) const {
  std::vector<AlgebraicNumber> v;
  for (std::size_t e : edges) v.push_back(sys.edge_delta(e));
  return v;
}

std::string digit_symbol(const System& sys, std::size_t edge) {
  const Word& p = sys.automaton().edge(edge).prefix;
  if (p.empty()) return "0";
  return "δ(" + word_to_string(p) + ")";
}

std::string Expansion::to_string(const System& sys) const {
  std::string s;
  for (int i = 0; i < integer_digits && i < static_cast<int>(edges.size()); ++i) s += digit_symbol(sys, edges[i]);
  s += ".";
  int frac = static_cast<int>(edges.size()) - integer_digits;
  auto sym = [&](int i) { return digit_symbol(sys, edges[integer_digits + i]); };
  switch (kind) {
    case ExpansionKind::Finite:
      for (int i = 0; i < preperiod; ++i) s += sym(i);
      if (preperiod == 0 && integer_digits == 0) s += "0";
      break;
    case ExpansionKind::EventuallyPeriodic:
      for (int i = 0; i < preperiod; ++i) s += sym(i);
      s += "(";
      for (int i = preperiod; i < preperiod + period; ++i) s += sym(i);
      s += ")^ω";
      break;
    case ExpansionKind::Truncated:
      for (int i = 0; i < frac; ++i) s += sym(i);
      s += "...";
      break;
  }
  return s;
}

namespace {

// Minimal preperiod and period of the digit values once the state sequence is
// known to be periodic from index `start` with period `len`.
void minimize_period(const System& sys, const std::vector<std::size_t>& edges, int start, int len, int* pre, int* per) {
  auto val = [&](int i) -> const AlgebraicNumber& {
    int idx = i < start + len ? i : start + (i - start) % len;
    return sys.edge_delta(edges[idx]);
  };
  int best = len;
  for (int d = 1; d < len; ++d) {
    if (len % d) continue;
    bool ok = true;
    for (int i = start; i < start + len && ok; ++i) ok = val(i) == val(i + d);
    if (ok) {
      best = d;
      break;
    }
  }
  int s = start;
  while (s > 0 && val(s - 1) == val(s - 1 + best)) --s;
  *pre = s;
  *per = best;
}

}  // namespace

Expansion expand(const System& sys, const AlgebraicNumber& x, Letter a, std::size_t max_digits) {
  if (a < 1 || a > sys.size()) fail(ErrorKind::Validation, "letter out of range");
  if (!sys.in_range(x, a)) fail(ErrorKind::Validation, "x = " + x.to_string() + " is not in [0, delta(" + std::to_string(a) + "))");
  Expansion ex;
  ex.letter = a;
  std::unordered_map<State, std::size_t, StateHash> seen;
  State st{x, a};
  while (true) {
    if (st.x.is_zero()) {
      ex.kind = ExpansionKind::Finite;
      ex.preperiod = static_cast<int>(ex.edges.size());
      ex.period = 1;
      return ex;
    }
    auto it = seen.find(st);
    if (it != seen.end()) {
      ex.kind = ExpansionKind::EventuallyPeriodic;
      int start = static_cast<int>(it->second);
      int len = static_cast<int>(ex.edges.size()) - start;
      minimize_period(sys, ex.edges, start, len, &ex.preperiod, &ex.period);
      return ex;
    }
    if (ex.edges.size() >= max_digits) {
      ex.kind = ExpansionKind::Truncated;
      return ex;
    }
    seen.emplace(st, ex.edges.size());
    Transition t = t_sigma(sys, st);
    ex.edges.push_back(t.edge);
    st = t.next;
  }
}

Expansion expand_real(const System& sys, const AlgebraicNumber& x, std::size_t max_digits) {
  if (x.sign() < 0) fail(ErrorKind::Validation, "expand_real needs x >= 0");
  const AlgebraicNumber ainv = sys.field().alpha_inverse();
  AlgebraicNumber y = x;
  int m = -1;
  while (true) {
    std::vector<Letter> fits;
    for (Letter a = 1; a <= sys.size(); ++a)
      if (sys.in_range(y, a)) fits.push_back(a);
    if (!fits.empty()) {
      Expansion ex = expand(sys, y, fits.front(), max_digits);
      ex.letter_tie = fits.size() > 1;
      ex.integer_digits = m + 1;
      if (ex.kind == ExpansionKind::Finite) {
        Letter cur = ex.letter;
        for (std::size_t e : ex.edges) cur = sys.automaton().edge(e).to;
        while (static_cast<int>(ex.edges.size()) < ex.integer_digits) {
          std::size_t e = sys.automaton().out_of(cur).front();
          ex.edges.push_back(e);
          cur = sys.automaton().edge(e).to;
        }
        ex.preperiod = std::max(0, ex.preperiod - ex.integer_digits);
      } else if (ex.kind == ExpansionKind::EventuallyPeriodic) {
        // re-express preperiod relative to the radix point
        // the tail after index preperiod is periodic, so a radix point past it leaves no preperiod
        ex.preperiod = std::max(0, ex.preperiod - ex.integer_digits);
        std::size_t need = static_cast<std::size_t>(ex.integer_digits + ex.preperiod + ex.period);
        // unroll the cycle so that the stored edges cover integer part, preperiod and one period
        State st{y, ex.letter};
        std::vector<std::size_t> edges;
        while (edges.size() < need) {
          Transition t = t_sigma(sys, st);
          edges.push_back(t.edge);
          st = t.next;
        }
        ex.edges = edges;
      }
      return ex;
    }
    y = y * ainv;
    ++m;
    if (m > 100000) fail(ErrorKind::Internal, "expand_real did not find an integer part");
  }
}

std::vector<State> t_inverse(const System& sys, const State& st) {
  std::vector<State> r;
  const AlgebraicNumber ainv = sys.field().alpha_inverse();
  for (std::size_t e : sys.automaton().into(st.letter))
    r.push_back({(st.x + sys.edge_delta(e)) * ainv, sys.automaton().edge(e).from});
  return r;
}

std::vector<LevelPoint> sigma_integer_level(const System& sys, Letter a, int k, std::size_t cap) {
  std::vector<LevelPoint> cur{{sys.field().zero(), a, {}}};
  AlgebraicNumber apow = sys.field().one();
  for (int level = 0; level < k; ++level) {
    std::vector<LevelPoint> next;
    for (auto& pt : cur) {
      for (std::size_t e : sys.automaton().into(pt.start)) {
        if (next.size() >= cap) fail(ErrorKind::ResourceCap, "sigma-integer level exceeds the point cap");
        LevelPoint q{pt.value + sys.edge_delta(e) * apow, sys.automaton().edge(e).from, pt.walk};
        q.walk.push_back(e);
        next.push_back(std::move(q));
      }
    }
    cur = std::move(next);
    apow = apow * sys.field().alpha();
  }
  return cur;
}

bool in_sigma_integer_level(const System& sys, const AlgebraicNumber& x, Letter a, int k) {
  AlgebraicNumber y = x * sys.field().alpha().pow(-k);
  for (Letter b = 1; b <= sys.size(); ++b) {
    if (!sys.in_range(y, b)) continue;
    State st{y, b};
    for (int i = 0; i < k; ++i) st = t_sigma(sys, st).next;
    if (st.letter == a && st.x.is_zero()) return true;
  }
  return false;
}

std::vector<bool> first_letter_cycles(const System& sys) {
  int n = sys.size();
  std::vector<bool> on(n + 1, false);
  for (Letter b = 1; b <= n; ++b) {
    Letter c = b;
    for (int i = 0; i < n; ++i) {
      c = sys.automaton().first_letter(c);
      if (c == b) {
        on[b] = true;
        break;
      }
    }
  }
  return on;
}

bool is_sigma_integer(const System& sys, const AlgebraicNumber& x, Letter a) {
  if (x.sign() < 0) return false;
  std::vector<bool> cyc = first_letter_cycles(sys);
  if (x.is_zero()) {
    // (0, a) is reached from a cycle letter through empty prefixes only
    for (Letter b = 1; b <= sys.size(); ++b) {
      if (!cyc[b]) continue;
      Letter c = b;
      for (int i = 0; i <= sys.size(); ++i) {
        if (c == a) return true;
        c = sys.automaton().first_letter(c);
      }
    }
    return false;
  }
  long double dmin = 0;
  for (auto& d : sys.digits().values)
    if (!d.is_zero()) {
      long double v = d.approx();
      if (dmin == 0 || v < dmin) dmin = v;
    }
  long double lg = std::log(x.approx() / dmin) / std::log(sys.field().alpha_approx());
  int k = std::max(0, static_cast<int>(std::ceil(lg))) + 2;
  AlgebraicNumber y = x * sys.field().alpha().pow(-k);
  for (Letter b = 1; b <= sys.size(); ++b) {
    if (!cyc[b] || !sys.in_range(y, b)) continue;
    State st{y, b};
    for (int i = 0; i < k; ++i) st = t_sigma(sys, st).next;
    if (st.letter == a && st.x.is_zero()) return true;
  }
  return false;
}

bool frac_membership(const System& sys, const AlgebraicNumber& x, Letter a) {
  if (!sys.in_range(x, a)) return false;
  return sys.eigen().membership(x).member;
}

std::optional<std::vector<std::size_t>> finite_expansion(const System& sys, const AlgebraicNumber& x, Letter a,
                                                         std::size_t max_digits) {
  Expansion ex = expand(sys, x, a, max_digits);
  if (ex.kind != ExpansionKind::Finite) return std::nullopt;
  return ex.edges;
}

bool is_admissible_walk(const System& sys, Letter a, const std::vector<std::size_t>& edges) {
  Letter cur = a;
  for (std::size_t e : edges) {
    const AutomatonEdge& ed = sys.automaton().edge(e);
    if (ed.from != cur) return false;
    cur = ed.to;
  }
  return true;
}

}  // namespace rauzy
