#include "topfan/linalg.hpp"

#include <numeric>
#include <utility>

namespace topfan {

RowEchelon rref(QMatrix a) {
  RowEchelon out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

int rank(const QMatrix& a) { return static_cast<int>(rref(a).pivots.size()); }

Rational determinant(QMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix aug(n, QVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || (n && e.pivots[n - 1] != static_cast<int>(n - 1))) return std::nullopt;
  QMatrix inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

QMatrix transpose(const QMatrix& a) {
  if (a.empty()) return {};
  QMatrix t(a[0].size(), QVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  QMatrix c(a.size(), QVec(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QVec apply(const QMatrix& a, const QVec& x) {
  QVec y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

QMatrix identity(int n) {
  QMatrix m(n, QVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QVec cofactor_normal(const std::vector<QVec>& rows) {
  const std::size_t n = rows.size() + 1;
  QVec normal(n);
  for (std::size_t k = 0; k < n; ++k) {
    QMatrix minor(rows.size(), QVec(n - 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0, t = 0; j < n; ++j)
        if (j != k) minor[i][t++] = rows[i][j];
    Rational d = determinant(std::move(minor));
    normal[k] = ((n - 1 + k) % 2 == 0) ? d : Rational(-d);
  }
  return normal;
}

Integer determinant(const std::vector<ZVec>& rows) {
  // Bareiss fraction-free elimination
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sgn * a[n - 1][n - 1];
}

Integer minor_gcd(const std::vector<ZVec>& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  const std::size_t n = rows[0].size();
  if (k > n) return 0;
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  Integer g = 0;
  while (true) {
    std::vector<ZVec> sub(k, ZVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = rows[i][cols[j]];
    Integer d = determinant(sub);
    g = boost::multiprecision::gcd(g, d < 0 ? Integer(-d) : d);
    if (g == 1) return g;
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

}  // namespace topfan
