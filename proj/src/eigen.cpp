#include "rauzy/eigen.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "rauzy/error.hpp"

namespace rauzy {

EigenNormalization EigenNormalization::parse(const std::string& text) {
  EigenNormalization n;
  std::string which = text, value = "1";
  auto eq = text.find('=');
  if (eq != std::string::npos) {
    which = text.substr(0, eq);
    value = text.substr(eq + 1);
  }
  if (which.size() > 1 && which[0] == 'v') which.erase(0, 1);
  if (which == "last" || which.empty()) {
    n.letter = 0;
  } else if (which == "first") {
    n.letter = 1;
  } else {
    try {
      n.letter = std::stoi(which);
    } catch (...) {
      fail(ErrorKind::Validation, "bad eigenvector normalization '" + text + "'");
    }
    if (n.letter < 1) fail(ErrorKind::Validation, "bad eigenvector normalization '" + text + "'");
  }
  n.value = value;
  return n;
}

std::string EigenNormalization::describe(int n) const {
  return "v_" + std::to_string(letter == 0 ? n : letter) + " = " + value;
}

namespace {

using AMatrix = std::vector<std::vector<AlgebraicNumber>>;

// A non-zero kernel vector of a rank n-1 square matrix over Q(alpha).
std::vector<AlgebraicNumber> kernel_vector(AMatrix a, const NumberField& k) {
  int n = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    AlgebraicNumber inv = a[row][c].inverse();
    for (int j = 0; j < n; ++j) a[row][j] = a[row][j] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      AlgebraicNumber f = a[r][c];
      for (int j = 0; j < n; ++j) a[r][j] = a[r][j] - f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (row != n - 1) fail(ErrorKind::Validation, "eigenspace is not one-dimensional");
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<AlgebraicNumber> x(n, k.zero());
  x[free_col] = k.one();
  for (int r = 0; r < n - 1; ++r) x[pivot_col[r]] = -a[r][free_col];
  return x;
}

}  // namespace

EigenData::EigenData(const NumberField& field, const IntMatrix& m, const EigenNormalization& norm)
    : field_(&field), m_(m), norm_(norm) {
  int n = m.rows();
  if (field.degree() != n) fail(ErrorKind::Validation, "matrix size does not match field degree");
  minv_ = inverse(to_rational(m));
  AlgebraicNumber a = field.alpha();
  AMatrix left(n, std::vector<AlgebraicNumber>(n, field.zero())), right = left;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      left[i][j] = field.from_rational(Rational(static_cast<long>(m(j, i))));
      right[i][j] = field.from_rational(Rational(static_cast<long>(m(i, j))));
    }
  for (int i = 0; i < n; ++i) {
    left[i][i] -= a;
    right[i][i] -= a;
  }
  v_ = kernel_vector(left, field);
  int pin = norm.letter == 0 ? n : norm.letter;
  if (pin > n) fail(ErrorKind::Validation, "eigenvector normalization letter out of range");
  AlgebraicNumber target = parse_element(field, norm.value);
  if (target.is_zero()) fail(ErrorKind::Validation, "eigenvector normalization value must be non-zero");
  AlgebraicNumber scale = target / v_[pin - 1];
  for (auto& x : v_) x = x * scale;
  for (auto& x : v_)
    if (x.sign() <= 0) fail(ErrorKind::Validation, "normalized left eigenvector must have positive entries");
  u_ = kernel_vector(right, field);
  AlgebraicNumber dot = field.zero();
  for (int i = 0; i < n; ++i) dot += u_[i] * v_[i];
  AlgebraicNumber inv = dot.inverse();
  for (auto& x : u_) x = x * inv;
  RatMatrix basis(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis(j, i) = v_[i].coeff(j);
  to_v_ = inverse(basis);
}

AlgebraicNumber EigenData::delta(const Word& w) const { return pair(abelianize(w, size())); }

AlgebraicNumber EigenData::pair(const std::vector<std::int64_t>& counts) const {
  int n = size();
  BigInt den = 1;
  for (auto& x : v_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<BigInt> num(n, 0);
  for (int i = 0; i < n; ++i) {
    if (counts[i] == 0) continue;
    BigInt f = BigInt(static_cast<long>(counts[i])) * (den / v_[i].denominator());
    for (int j = 0; j < n; ++j) num[j] += f * v_[i].numerators()[j];
  }
  return AlgebraicNumber(field_, std::move(num), den);
}

AlgebraicNumber EigenData::from_v_coordinates(const std::vector<Rational>& c) const {
  AlgebraicNumber r = field_->zero();
  for (int i = 0; i < size(); ++i)
    if (c[i] != 0) r += v_[i] * c[i];
  return r;
}

std::vector<Rational> EigenData::v_coordinates(const AlgebraicNumber& x) const { return to_v_ * x.coeffs(); }

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<BigInt>& v) const {
    std::size_t h = 0;
    for (auto& z : v) h = hash_combine(h, hash_big(z));
    return h;
  }
};

}  // namespace

Membership EigenData::membership(const AlgebraicNumber& x, std::size_t state_cap) const {
  int n = size();
  std::vector<Rational> c = v_coordinates(x);
  BigInt d = 1;
  for (auto& q : c) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  if (d == 1) return {true, 0};
  // Primes of the denominator not dividing det M can never be cleared.
  BigInt det = abs(determinant(to_rational(m_)).get_num());
  BigInt rest = d, g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), det.get_mpz_t());
    if (g == 1) break;
    while (mpz_divisible_p(rest.get_mpz_t(), g.get_mpz_t())) rest /= g;
  }
  if (rest != 1) return {false, 0};
  std::vector<BigInt> s(n);
  for (int i = 0; i < n; ++i) s[i] = mod_pos(c[i].get_num() * (d / c[i].get_den()), d);
  std::unordered_set<std::vector<BigInt>, VecHash> seen;
  for (int l = 0;; ++l) {
    bool zero = std::all_of(s.begin(), s.end(), [](const BigInt& z) { return z == 0; });
    if (zero) return {true, l};
    if (!seen.insert(s).second) return {false, 0};
    if (seen.size() > state_cap) fail(ErrorKind::ResourceCap, "membership cycle detection exceeded state cap");
    std::vector<BigInt> t(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m_(i, j) != 0) t[i] += BigInt(static_cast<long>(m_(i, j))) * s[j];
    for (int i = 0; i < n; ++i) s[i] = mod_pos(t[i], d);
  }
}

DigitSet digit_set(const PrefixAutomaton& automaton, const EigenData& eigen) {
  DigitSet ds;
  std::vector<AlgebraicNumber> per_edge;
  for (auto& e : automaton.edges()) per_edge.push_back(eigen.delta(e.prefix));
  std::vector<AlgebraicNumber> uniq;
  for (auto& x : per_edge)
    if (std::find(uniq.begin(), uniq.end(), x) == uniq.end()) uniq.push_back(x);
  std::sort(uniq.begin(), uniq.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a < b; });
  ds.values = uniq;
  ds.edges.resize(uniq.size());
  ds.value_of_edge.resize(per_edge.size());
  for (std::size_t i = 0; i < per_edge.size(); ++i) {
    std::size_t k = std::find(uniq.begin(), uniq.end(), per_edge[i]) - uniq.begin();
    ds.edges[k].push_back(i);
    ds.value_of_edge[i] = k;
  }
  return ds;
}

}  // namespace rauzy
