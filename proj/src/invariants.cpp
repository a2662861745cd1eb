#include "topfan/invariants.hpp"

#include "topfan/errors.hpp"

#include <algorithm>
#include <numeric>

namespace topfan {

int degree(const Monomial& mono) { return std::accumulate(mono.begin(), mono.end(), 0); }

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b, int max_degree) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial mono(ma.size());
      for (std::size_t i = 0; i < ma.size(); ++i) mono[i] = ma[i] + mb[i];
      if (max_degree >= 0 && degree(mono) > max_degree) continue;
      auto& slot = out[mono];
      slot += ca * cb;
      if (slot == 0) out.erase(mono);
    }
  return out;
}

Polynomial variable(int m, Vertex i) {
  Monomial mono(m, 0);
  mono[i - 1] = 1;
  return {{mono, 1}};
}

bool GradedClass::is_zero() const { return topfan::is_zero(coords); }

CohomPresentation cohomology_presentation(const TopologicalFan& fan) {
  CohomPresentation p;
  p.m = fan.ray_count();
  p.sr_monomials = minimal_non_faces(fan.complex());
  for (int k = 0; k < fan.dim(); ++k) {
    ZVec row;
    for (const auto& r : fan.rays()) row.push_back(r.v[k]);
    p.linear_relations.push_back(row);
  }
  return p;
}

namespace {

void compositions(int parts, int total, Monomial& cur, std::size_t at, std::vector<Monomial>& out) {
  if (at + 1 == cur.size()) {
    cur[at] = total;
    out.push_back(cur);
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur[at] = e;
    compositions(parts, total - e, cur, at + 1, out);
  }
}

std::vector<Monomial> monomials_of_degree(int vars, int k) {
  std::vector<Monomial> out;
  if (vars == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  Monomial cur(vars, 0);
  compositions(vars, k, cur, 0, out);
  return out;
}

std::vector<int> as_multiset(const Monomial& mono) {
  std::vector<int> out;
  for (std::size_t i = 0; i < mono.size(); ++i)
    for (int e = 0; e < mono[i]; ++e) out.push_back(static_cast<int>(i));
  return out;
}

bool squarefree(const Monomial& mono) {
  return std::all_of(mono.begin(), mono.end(), [](int e) { return e <= 1; });
}

// basis preference: squarefree first, then lexicographic on the sorted variable list
bool preferred(const Monomial& a, const Monomial& b) {
  bool sa = squarefree(a), sb = squarefree(b);
  if (sa != sb) return sa;
  return as_multiset(a) < as_multiset(b);
}

}  // namespace

GradedQuotient::GradedQuotient(const TopologicalFan& fan) : m_(fan.ray_count()), n_(fan.dim()) {
  sr_ = minimal_non_faces(fan.complex());
  QMatrix rel(n_, QVec(m_));
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < m_; ++i) rel[k][i] = fan.rays()[i].v[k];
  auto e = rref(rel);
  std::vector<int> pivot_row(m_, -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<int>(r);
  for (int x = 0; x < m_; ++x)
    if (pivot_row[x] < 0) free_.push_back(x);
  const std::size_t r = free_.size();
  linear_form_.assign(m_, QVec(r));
  for (int x = 0; x < m_; ++x) {
    if (pivot_row[x] < 0) {
      linear_form_[x][std::find(free_.begin(), free_.end(), x) - free_.begin()] = 1;
    } else {
      // mu_x + sum_f row[f] mu_f = 0
      for (std::size_t f = 0; f < r; ++f) linear_form_[x][f] = -e.rows[pivot_row[x]][free_[f]];
    }
  }
}

Polynomial GradedQuotient::substitute(const Monomial& mono) const {
  const int r = static_cast<int>(free_.size());
  Polynomial out{{Monomial(r, 0), 1}};
  for (int x = 0; x < m_; ++x) {
    if (mono[x] == 0) continue;
    Polynomial lin;
    for (int f = 0; f < r; ++f)
      if (linear_form_[x][f] != 0) {
        Monomial v(r, 0);
        v[f] = 1;
        lin[v] = linear_form_[x][f];
      }
    for (int e = 0; e < mono[x]; ++e) out = poly_multiply(out, lin);
  }
  return out;
}

const GradedQuotient::Piece& GradedQuotient::piece(int k) const {
  if (k < 0 || k > n_) throw DegreeOutOfRange("degree " + std::to_string(k) + " outside [0," + std::to_string(n_) + "]");
  auto it = pieces_.find(k);
  if (it != pieces_.end()) return it->second;
  Piece p;
  const int r = static_cast<int>(free_.size());
  p.columns = monomials_of_degree(r, k);
  std::sort(p.columns.begin(), p.columns.end(), [](const Monomial& a, const Monomial& b) { return preferred(b, a); });
  for (std::size_t c = 0; c < p.columns.size(); ++c) p.column_of[p.columns[c]] = c;
  QMatrix rows;
  for (const auto& s : sr_) {
    const int d = static_cast<int>(s.size());
    if (d > k) continue;
    Monomial mono(m_, 0);
    for (auto v : s) mono[v - 1] = 1;
    Polynomial sub = substitute(mono);
    for (const auto& t : monomials_of_degree(r, k - d)) {
      Polynomial prod = poly_multiply(sub, {{t, 1}});
      QVec row(p.columns.size());
      for (const auto& [mono2, coef] : prod) row[p.column_of.at(mono2)] = coef;
      rows.push_back(std::move(row));
    }
  }
  p.relations = rows.empty() ? RowEchelon{} : rref(std::move(rows));
  std::vector<bool> pivot(p.columns.size(), false);
  for (int c : p.relations.pivots) pivot[c] = true;
  for (std::size_t c = p.columns.size(); c-- > 0;)
    if (!pivot[c]) p.basis_columns.push_back(c);
  return pieces_.emplace(k, std::move(p)).first->second;
}

int GradedQuotient::rank(int k) const { return static_cast<int>(piece(k).basis_columns.size()); }

std::vector<Monomial> GradedQuotient::basis(int k) const {
  const auto& p = piece(k);
  std::vector<Monomial> out;
  for (auto c : p.basis_columns) {
    Monomial mono(m_, 0);
    for (std::size_t f = 0; f < free_.size(); ++f) mono[free_[f]] = p.columns[c][f];
    out.push_back(mono);
  }
  return out;
}

GradedClass GradedQuotient::normal_form(const Polynomial& poly, int k) const {
  const auto& p = piece(k);
  GradedClass out;
  out.degree = k;
  out.basis = basis(k);
  QVec x(p.columns.size());
  for (const auto& [mono, coef] : poly) {
    if (static_cast<int>(mono.size()) != m_) throw LengthMismatch("monomial has wrong number of variables");
    if (degree(mono) != k) throw DegreeOutOfRange("term of degree " + std::to_string(degree(mono)) + " in degree " +
                                                  std::to_string(k) + " reduction");
    if (!is_integer(coef)) out.integral = false;
    for (const auto& [m2, c2] : substitute(mono)) {
      x[p.column_of.at(m2)] += coef * c2;
      if (!is_integer(c2)) out.integral = false;
    }
  }
  for (std::size_t r = 0; r < p.relations.rows.size(); ++r) {
    const int c = p.relations.pivots[r];
    if (x[c] == 0) continue;
    Rational f = x[c];
    const auto& row = p.relations.rows[r];
    for (std::size_t j = 0; j < x.size(); ++j)
      if (row[j] != 0) {
        if (!is_integer(row[j])) out.integral = false;
        x[j] -= f * row[j];
      }
  }
  for (auto c : p.basis_columns) {
    out.coords.push_back(x[c]);
    if (!is_integer(x[c])) out.integral = false;
  }
  return out;
}

std::vector<long long> betti_numbers(const TopologicalFan& fan) { return f_h_vectors(fan.complex()).h; }

int graded_rank(const TopologicalFan& fan, int k) { return GradedQuotient(fan).rank(k); }

PontrjaginClass pontrjagin_class(const TopologicalFan& fan) {
  GradedQuotient q(fan);
  const int m = fan.ray_count(), n = fan.dim();
  Polynomial total{{Monomial(m, 0), 1}};
  for (Vertex i = 1; i <= m; ++i) {
    Polynomial factor{{Monomial(m, 0), 1}};
    Monomial sq(m, 0);
    sq[i - 1] = 2;
    factor[sq] = 1;
    total = poly_multiply(total, factor, n);
  }
  PontrjaginClass out;
  for (int k = 0; k <= n; ++k) {
    Polynomial part;
    for (const auto& [mono, coef] : total)
      if (degree(mono) == k) part[mono] = coef;
    out.by_degree.push_back(q.normal_form(part, k));
  }
  return out;
}

int OmniWeights::weight(const Simplex& facet) const {
  Simplex s = make_simplex(facet);
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (facets[i] == s) return w[i];
  throw NotAFacet("no weight for simplex");
}

OmniWeights omni_weights(const TopologicalFan& fan) {
  OmniWeights out;
  for (const auto& f : fan.complex().facets()) {
    out.facets.push_back(f);
    out.w.push_back(orientation_sign(fan.betas(f)));
  }
  return out;
}

ToddResult todd_genus(const TopologicalFan& fan, const QVec& direction) {
  if (!is_generic_direction(fan, direction, ConeMode::V)) throw DegenerateDirection("direction lies on a v-cone wall");
  ToddResult res;
  res.direction = direction;
  for (const auto& f : fan.complex().facets()) {
    if (!cone_contains(fan, f, direction, ConeMode::V)) continue;
    int w = orientation_sign(fan.betas(f));
    res.cones.push_back(f);
    res.weights.push_back(w);
    res.genus += w;
  }
  return res;
}

ToddResult todd_genus(const TopologicalFan& fan, std::uint64_t seed) {
  return todd_genus(fan, random_generic_direction(fan, ConeMode::V, seed));
}

}  // namespace topfan
