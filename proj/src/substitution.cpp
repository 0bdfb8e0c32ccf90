#include "rauzy/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

std::string word_to_string(const Word& w) {
  std::string s;
  for (Letter a : w) {
    if (a < 10)
      s += char('0' + a);
    else
      s += "{" + std::to_string(a) + "}";
  }
  return s;
}

Substitution::Substitution(std::vector<Word> images) : images_(std::move(images)) {
  int n = size();
  if (n == 0) fail(ErrorKind::Validation, "empty alphabet");
  for (int b = 1; b <= n; ++b) {
    if (image(b).empty()) fail(ErrorKind::Validation, "empty image for letter " + std::to_string(b));
    for (Letter a : image(b))
      if (a < 1 || a > n) fail(ErrorKind::Validation, "letter " + std::to_string(a) + " out of range 1.." + std::to_string(n));
  }
  if (!has_growth(incidence_matrix(*this)))
    fail(ErrorKind::Validation, "no letter with growing image (dominant eigenvalue 1)");
}

Word Substitution::apply(const Word& w) const {
  Word r;
  for (Letter a : w) r.insert(r.end(), image(a).begin(), image(a).end());
  return r;
}

Word Substitution::iterate(const Word& w, int k, std::size_t cap) const {
  Word cur = w;
  for (int i = 0; i < k; ++i) {
    std::size_t len = 0;
    for (Letter a : cur) len += image(a).size();
    if (len > cap) fail(ErrorKind::ResourceCap, "word length cap exceeded");
    cur = apply(cur);
  }
  return cur;
}

Substitution Substitution::power(int k) const {
  std::vector<Word> imgs;
  for (int a = 1; a <= size(); ++a) imgs.push_back(iterate({a}, k));
  return Substitution(std::move(imgs));
}

std::string Substitution::to_string() const {
  std::string s;
  for (int a = 1; a <= size(); ++a) {
    if (a > 1) s += ';';
    s += word_to_string({a}) + "->" + word_to_string(image(a));
  }
  return s;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_number(const std::string& s, std::size_t& i) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    fail(ErrorKind::Validation, "malformed substitution: expected number in '" + s + "'");
  long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000) fail(ErrorKind::Validation, "number too large in '" + s + "'");
    ++i;
  }
  return static_cast<int>(v);
}

Word parse_image(const std::string& s) {
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      w.push_back(c - '0');
      ++i;
    } else if (c == '{') {
      ++i;
      w.push_back(parse_number(s, i));
      if (i >= s.size() || s[i] != '}') fail(ErrorKind::Validation, "malformed substitution: missing '}'");
      ++i;
    } else if (c == '^') {
      ++i;
      if (w.empty()) fail(ErrorKind::Validation, "malformed substitution: '^' without a letter");
      int k = parse_number(s, i);
      if (k == 0) {
        w.pop_back();
      } else {
        Letter a = w.back();
        w.insert(w.end(), k - 1, a);
      }
    } else {
      fail(ErrorKind::Validation, std::string("malformed substitution: unexpected character '") + c + "'");
    }
  }
  return w;
}

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::map<int, Word> rules;
  int max_letter = 0;
  std::string src(text);
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t end = src.find(';', start);
    if (end == std::string::npos) end = src.size();
    std::string rule = trim(std::string_view(src).substr(start, end - start));
    start = end + 1;
    if (rule.empty()) continue;
    std::size_t arrow = rule.find("->");
    if (arrow == std::string::npos) fail(ErrorKind::Validation, "malformed substitution: missing '->' in '" + rule + "'");
    std::string lhs = trim(std::string_view(rule).substr(0, arrow));
    if (lhs.size() > 2 && lhs.front() == '{' && lhs.back() == '}') lhs = lhs.substr(1, lhs.size() - 2);
    std::size_t i = 0;
    int a = parse_number(lhs, i);
    if (i != lhs.size()) fail(ErrorKind::Validation, "malformed substitution: bad letter '" + lhs + "'");
    if (a < 1) fail(ErrorKind::Validation, "letter out of range: 0");
    if (rules.count(a)) fail(ErrorKind::Validation, "duplicate rule for letter " + std::to_string(a));
    Word img = parse_image(rule.substr(arrow + 2));
    if (img.empty()) fail(ErrorKind::Validation, "empty image for letter " + std::to_string(a));
    max_letter = std::max(max_letter, a);
    for (Letter b : img) {
      if (b < 1) fail(ErrorKind::Validation, "letter out of range: 0");
      max_letter = std::max(max_letter, b);
    }
    rules[a] = std::move(img);
  }
  if (rules.empty()) fail(ErrorKind::Validation, "malformed substitution: no rules");
  std::vector<Word> images;
  for (int a = 1; a <= max_letter; ++a) {
    auto it = rules.find(a);
    if (it == rules.end()) fail(ErrorKind::Validation, "letter out of range: no rule for letter " + std::to_string(a));
    images.push_back(it->second);
  }
  return Substitution(std::move(images));
}

std::vector<std::int64_t> abelianize(const Word& w, int n) {
  std::vector<std::int64_t> v(n, 0);
  for (Letter a : w) {
    if (a < 1 || a > n) fail(ErrorKind::Validation, "letter out of range");
    ++v[a - 1];
  }
  return v;
}

IntMatrix incidence_matrix(const Substitution& s) {
  int n = s.size();
  IntMatrix m(n, n);
  for (int b = 1; b <= n; ++b)
    for (Letter a : s.image(b)) ++m(a - 1, b - 1);
  return m;
}

bool is_primitive(const IntMatrix& m) {
  int n = m.rows();
  int bound = (n - 1) * (n - 1) + 1;
  std::vector<char> base(std::size_t(n) * n), cur;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) base[i * n + j] = m(i, j) > 0;
  cur = base;
  for (int k = 1; k <= bound; ++k) {
    if (std::all_of(cur.begin(), cur.end(), [](char c) { return c != 0; })) return true;
    std::vector<char> next(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (cur[i * n + l])
          for (int j = 0; j < n; ++j)
            if (base[l * n + j]) next[i * n + j] = 1;
    cur = std::move(next);
  }
  return false;
}

bool has_growth(const IntMatrix& m) {
  // A strongly connected non-negative integer block has spectral radius 1 exactly
  // when it is a simple cycle of unit weights; any extra weight forces radius > 1.
  int n = m.rows();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  std::function<void(int)> strong = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (m(w, v) == 0) continue;  // edge v -> w when w occurs in image of v
      if (index[w] < 0) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) strong(v);
  std::vector<std::int64_t> weight(ncomp, 0), count(ncomp, 0);
  for (int v = 0; v < n; ++v) ++count[comp[v]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (comp[i] == comp[j]) weight[comp[i]] += m(i, j);
  for (int c = 0; c < ncomp; ++c)
    if (weight[c] > count[c]) return true;
  return false;
}

PrefixAutomaton::PrefixAutomaton(const Substitution& s) : n_(s.size()), into_(n_), out_(n_) {
  for (int b = 1; b <= n_; ++b) {
    const Word& img = s.image(b);
    for (std::size_t pos = 0; pos < img.size(); ++pos) {
      AutomatonEdge e{b, Word(img.begin(), img.begin() + pos), img[pos], Word(img.begin() + pos + 1, img.end())};
      into_[e.to - 1].push_back(edges_.size());
      out_[b - 1].push_back(edges_.size());
      edges_.push_back(std::move(e));
    }
  }
}

namespace {

// Positions with equal abelianized prefixes share their index, so a running
// difference of letter counts decides coincidence in one pass.
bool coincide(const Word& w1, const Word& w2, int n, bool from_end) {
  std::vector<std::int64_t> diff(n, 0);
  std::size_t len = std::min(w1.size(), w2.size());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < len; ++i) {
    Letter a1 = from_end ? w1[w1.size() - 1 - i] : w1[i];
    Letter a2 = from_end ? w2[w2.size() - 1 - i] : w2[i];
    if (a1 == a2 && nonzero == 0) return true;
    auto bump = [&](Letter a, int d) {
      std::int64_t& x = diff[a - 1];
      if (x == 0) ++nonzero;
      x += d;
      if (x == 0) --nonzero;
    };
    bump(a1, 1);
    bump(a2, -1);
  }
  return false;
}

}  // namespace

CoincidenceVerdict strong_coincidence(const Substitution& s, int k_max, std::size_t word_cap) {
  CoincidenceVerdict v;
  v.k_max = k_max;
  int n = s.size();
  int worst = 0;
  std::vector<Word> words(n);
  for (int a = 1; a <= n; ++a) words[a - 1] = {a};
  std::vector<std::vector<char>> done(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> found(n, std::vector<int>(n, 0));
  int remaining = n * (n - 1) / 2;
  for (int k = 1; k <= k_max && remaining > 0; ++k) {
    for (int a = 0; a < n; ++a) {
      std::size_t len = 0;
      for (Letter c : words[a]) len += s.image(c).size();
      if (len > word_cap) {
        v.holds = false;
        v.reason = "word-length cap " + std::to_string(word_cap) + " exceeded at power " + std::to_string(k);
        return v;
      }
      words[a] = s.apply(words[a]);
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (done[a][b]) continue;
        if (coincide(words[a], words[b], n, false) || coincide(words[a], words[b], n, true)) {
          done[a][b] = 1;
          found[a][b] = k;
          worst = std::max(worst, k);
          --remaining;
        }
      }
  }
  if (remaining > 0) {
    v.holds = false;
    v.reason = "no coincidence found up to power " + std::to_string(k_max);
    return v;
  }
  v.holds = true;
  v.k = worst;
  return v;
}

PeriodicSeed periodic_point_seed(const Substitution& s) {
  int n = s.size();
  PeriodicSeed best{0, std::numeric_limits<int>::max()};
  for (Letter a = 1; a <= n; ++a) {
    Letter c = a;
    for (int k = 1; k <= n; ++k) {
      c = s.image(c).front();
      if (c == a) {
        if (k < best.period) best = {a, k};
        break;
      }
    }
  }
  return best;
}

Word fixed_point_prefix(const Substitution& s, Letter a, std::size_t len) {
  if (s.image(a).front() != a) fail(ErrorKind::Validation, "image of the seed letter does not start with it");
  Word w{a};
  while (w.size() < len) {
    Word next;
    for (Letter c : w) {
      next.insert(next.end(), s.image(c).begin(), s.image(c).end());
      if (next.size() >= len) break;
    }
    if (next.size() <= w.size()) fail(ErrorKind::Validation, "fixed point does not grow from the seed letter");
    w = std::move(next);
  }
  w.resize(len);
  return w;
}

DevelopmentSequence position_development(const Substitution& s, Letter a, std::uint64_t j, int depth) {
  int n = s.size();
  const std::uint64_t sat = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::vector<std::uint64_t>> lens(depth + 1, std::vector<std::uint64_t>(n, 1));
  for (int i = 1; i <= depth; ++i)
    for (int b = 1; b <= n; ++b) {
      std::uint64_t t = 0;
      for (Letter c : s.image(b)) t = std::min(sat, t + lens[i - 1][c - 1]);
      lens[i][b - 1] = t;
    }
  if (j >= lens[depth][a - 1]) fail(ErrorKind::Validation, "position out of range");
  DevelopmentSequence d(depth);
  Letter cur = a;
  std::uint64_t r = j;
  for (int i = depth - 1; i >= 0; --i) {
    const Word& img = s.image(cur);
    for (std::size_t pos = 0; pos < img.size(); ++pos) {
      std::uint64_t l = lens[i][img[pos] - 1];
      if (r < l) {
        d[i] = {Word(img.begin(), img.begin() + pos), img[pos], Word(img.begin() + pos + 1, img.end())};
        cur = img[pos];
        break;
      }
      r -= l;
    }
  }
  return d;
}

DevelopmentSequence adic_successor(const Substitution& s, const DevelopmentSequence& d) {
  std::size_t i0 = 0;
  while (i0 < d.size() && d[i0].suffix.empty()) ++i0;
  if (i0 == d.size()) fail(ErrorKind::Validation, "needs longer truncation: all suffixes are empty");
  DevelopmentSequence r = d;
  Word whole = d[i0].prefix;
  whole.push_back(d[i0].letter);
  whole.insert(whole.end(), d[i0].suffix.begin(), d[i0].suffix.end());
  std::size_t q = d[i0].prefix.size() + 1;
  r[i0] = {Word(whole.begin(), whole.begin() + q), whole[q], Word(whole.begin() + q + 1, whole.end())};
  for (std::size_t i = i0; i-- > 0;) {
    const Word& img = s.image(r[i + 1].letter);
    r[i] = {Word{}, img.front(), Word(img.begin() + 1, img.end())};
  }
  return r;
}

bool is_valid_development(const Substitution& s, const DevelopmentSequence& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    Word w = d[i].prefix;
    w.push_back(d[i].letter);
    w.insert(w.end(), d[i].suffix.begin(), d[i].suffix.end());
    if (i + 1 < d.size()) {
      if (w != s.image(d[i + 1].letter)) return false;
    } else {
      bool any = false;
      for (int b = 1; b <= s.size(); ++b) any = any || w == s.image(b);
      if (!any) return false;
    }
  }
  return true;
}

}  // namespace rauzy
