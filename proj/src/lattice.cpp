#include "rauzy/lattice.hpp"

#include <cmath>

#include "rauzy/error.hpp"

namespace rauzy {

std::vector<IntVec> hnf(std::vector<IntVec> rows, int n) {
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    // gcd-combine all rows below r into row r on this column
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      BigInt a = rows[r][col], b = rows[i][col], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      BigInt ag = a / g, bg = b / g;
      for (int j = 0; j < n; ++j) {
        BigInt x = rows[r][j], y = rows[i][j];
        rows[r][j] = s * x + t * y;
        rows[i][j] = -bg * x + ag * y;
      }
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      if (q != 0)
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

namespace {

long double dot(const std::vector<long double>& a, const std::vector<long double>& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void gram_schmidt(const std::vector<std::vector<long double>>& b, std::vector<std::vector<long double>>& mu,
                  std::vector<long double>& norm2) {
  std::size_t n = b.size();
  std::vector<std::vector<long double>> bs = b;
  mu.assign(n, std::vector<long double>(n, 0));
  norm2.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = norm2[j] > 0 ? dot(b[i], bs[j]) / norm2[j] : 0;
      for (std::size_t t = 0; t < bs[i].size(); ++t) bs[i][t] -= mu[i][j] * bs[j][t];
    }
    norm2[i] = dot(bs[i], bs[i]);
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> lll_reduce(std::vector<std::vector<long double>>& b) {
  std::size_t n = b.size();
  std::vector<std::vector<std::int64_t>> u(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::vector<std::vector<long double>> mu;
  std::vector<long double> norm2;
  gram_schmidt(b, mu, norm2);
  std::size_t k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) fail(ErrorKind::Precision, "LLL reduction did not converge");
    for (std::size_t j = k; j-- > 0;) {
      long double q = std::nearbyint(mu[k][j]);
      if (q != 0) {
        auto qi = static_cast<std::int64_t>(q);
        for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
        for (std::size_t t = 0; t < n; ++t) u[k][t] -= qi * u[j][t];
        gram_schmidt(b, mu, norm2);
      }
    }
    if (norm2[k] >= (0.99L - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(u[k], u[k - 1]);
      gram_schmidt(b, mu, norm2);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return u;
}

void enumerate_ball(const std::vector<std::vector<long double>>& b, const std::vector<long double>& center,
                    long double radius2, const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  int n = static_cast<int>(b.size());
  std::vector<std::vector<long double>> mu;
  std::vector<long double> norm2;
  gram_schmidt(b, mu, norm2);
  // center in Gram-Schmidt coordinates: c = sum_i t_i b*_i (+ orthogonal part)
  std::vector<std::vector<long double>> bs = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      for (std::size_t t = 0; t < bs[i].size(); ++t) bs[i][t] -= mu[i][j] * bs[j][t];
  std::vector<long double> tc(n);
  long double orth = dot(center, center);
  for (int i = 0; i < n; ++i) {
    tc[i] = dot(center, bs[i]) / norm2[i];
    orth -= tc[i] * tc[i] * norm2[i];
  }
  if (orth < 0) orth = 0;
  std::vector<std::int64_t> k(n, 0);
  std::vector<long double> partial(n + 1, 0);
  partial[n] = orth;
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i < 0) {
      if (!visit(k)) stop = true;
      return;
    }
    long double c = tc[i];
    for (int j = i + 1; j < n; ++j) c -= static_cast<long double>(k[j]) * mu[j][i];
    long double rem = radius2 - partial[i + 1];
    if (rem < 0) return;
    long double w = std::sqrt(rem / norm2[i]);
    auto lo = static_cast<std::int64_t>(std::ceil(c - w - 1e-12L));
    auto hi = static_cast<std::int64_t>(std::floor(c + w + 1e-12L));
    for (std::int64_t v = lo; v <= hi && !stop; ++v) {
      long double d = static_cast<long double>(v) - c;
      partial[i] = partial[i + 1] + d * d * norm2[i];
      if (partial[i] > radius2 * (1 + 1e-12L) + 1e-15L) continue;
      k[i] = v;
      rec(i - 1);
    }
  };
  rec(n - 1);
}

}  // namespace rauzy
