#include "topfan/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace topfan {

namespace {

// g . z >= h
struct Ineq {
  QVec g;
  Rational h;
};

void normalize(Ineq& q) {
  Rational scale = 0;
  for (const auto& x : q.g)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0 || scale == 1) return;
  for (auto& x : q.g) x /= scale;
  q.h /= scale;
}

std::vector<Ineq> dedupe(std::vector<Ineq> in) {
  std::sort(in.begin(), in.end(), [](const Ineq& a, const Ineq& b) {
    if (a.g != b.g) return a.g < b.g;
    return a.h > b.h;
  });
  std::vector<Ineq> out;
  for (auto& q : in)
    if (out.empty() || out.back().g != q.g) out.push_back(std::move(q));
  return out;
}

// Fourier-Motzkin; returns a point or nullopt
std::optional<QVec> fm_solve(std::vector<Ineq> sys, std::size_t dims) {
  std::vector<std::vector<Ineq>> stages;
  for (std::size_t v = dims; v-- > 0;) {
    for (auto& q : sys) normalize(q);
    sys = dedupe(std::move(sys));
    stages.push_back(sys);
    std::vector<Ineq> pos, neg, next;
    for (auto& q : sys) {
      int s = sign(q.g[v]);
      if (s > 0) pos.push_back(q);
      else if (s < 0) neg.push_back(q);
      else next.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // p.g[v] > 0, n.g[v] < 0
        Rational a = -n.g[v], b = p.g[v];
        Ineq c{QVec(dims), a * p.h + b * n.h};
        for (std::size_t k = 0; k < dims; ++k) c.g[k] = a * p.g[k] + b * n.g[k];
        c.g[v] = 0;
        next.push_back(std::move(c));
      }
    sys = std::move(next);
  }
  for (const auto& q : sys)
    if (q.h > 0) return std::nullopt;  // 0 >= h fails
  QVec z(dims);
  for (std::size_t v = 0; v < dims; ++v) {
    const auto& st = stages[dims - 1 - v];
    std::optional<Rational> lo, hi;
    for (const auto& q : st) {
      if (q.g[v] == 0) continue;
      Rational rest = q.h;
      for (std::size_t k = 0; k < v; ++k) rest -= q.g[k] * z[k];
      Rational bound = rest / q.g[v];
      if (q.g[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    Rational val = 0;
    if (lo && *lo > 0) val = *lo;
    else if (hi && *hi < 0) val = *hi;
    z[v] = val;
  }
  return z;
}

}  // namespace

std::optional<QVec> find_feasible_point(const QMatrix& a, const QVec& rhs, const std::vector<bool>& nonneg) {
  const std::size_t vars = nonneg.size();
  QMatrix aug;
  for (std::size_t i = 0; i < a.size(); ++i) {
    QVec row = a[i];
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == static_cast<int>(vars)) return std::nullopt;
  std::vector<int> pivot_row(vars, -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<int>(r);
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < vars; ++j)
    if (pivot_row[j] < 0) free_vars.push_back(j);
  const std::size_t dims = free_vars.size();
  // y_p = rhs_p - sum_f row_p[f] z_f
  std::vector<Ineq> sys;
  for (std::size_t j = 0; j < vars; ++j) {
    if (!nonneg[j]) continue;
    Ineq q{QVec(dims), 0};
    if (pivot_row[j] < 0) {
      auto pos = std::find(free_vars.begin(), free_vars.end(), j) - free_vars.begin();
      q.g[pos] = 1;
    } else {
      const auto& row = e.rows[pivot_row[j]];
      for (std::size_t f = 0; f < dims; ++f) q.g[f] = -row[free_vars[f]];
      q.h = -row[vars];
    }
    if (is_zero(q.g)) {
      if (q.h > 0) return std::nullopt;
      continue;
    }
    sys.push_back(std::move(q));
  }
  auto z = fm_solve(std::move(sys), dims);
  if (!z) return std::nullopt;
  QVec y(vars);
  for (std::size_t f = 0; f < dims; ++f) y[free_vars[f]] = (*z)[f];
  for (std::size_t j = 0; j < vars; ++j) {
    if (pivot_row[j] < 0) continue;
    const auto& row = e.rows[pivot_row[j]];
    Rational val = row[vars];
    for (std::size_t f = 0; f < dims; ++f) val -= row[free_vars[f]] * (*z)[f];
    y[j] = val;
  }
  return y;
}

bool in_cone(const std::vector<QVec>& gens, const QVec& x) {
  const std::size_t n = x.size();
  QMatrix a(n, QVec(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) a[k][j] = gens[j][k];
  return find_feasible_point(a, x, std::vector<bool>(gens.size(), true)).has_value();
}

}  // namespace topfan
