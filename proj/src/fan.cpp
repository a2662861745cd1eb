#include "topfan/fan.hpp"

#include "topfan/errors.hpp"
#include "topfan/linalg.hpp"
#include "topfan/polyhedral.hpp"

#include <algorithm>
#include <random>

namespace topfan {

Ray Ray::ordinary(const ZVec& v) { return {to_qvec(v), QVec(v.size()), v}; }

RVec Ray::as_rvec() const {
  RVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = {b[k], c[k], v[k]};
  return out;
}

Ray Ray::from_rvec(const RVec& beta) {
  Ray r;
  for (const auto& x : beta) {
    r.b.push_back(x.b);
    r.c.push_back(x.c);
    r.v.push_back(x.v);
  }
  return r;
}

TopologicalFan::TopologicalFan(int n, SimplicialComplex complex, std::vector<Ray> rays)
    : n_(n), complex_(std::move(complex)), rays_(std::move(rays)) {
  if (n < 0) throw InvalidFan("negative dimension");
  if (static_cast<int>(rays_.size()) != complex_.vertex_count())
    throw InvalidFan("ray count " + std::to_string(rays_.size()) + " differs from vertex count " +
                     std::to_string(complex_.vertex_count()));
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    auto& r = rays_[i];
    if (r.c.empty()) r.c.assign(n, 0);
    const std::string who = "ray " + std::to_string(i + 1);
    if (static_cast<int>(r.b.size()) != n || static_cast<int>(r.c.size()) != n || static_cast<int>(r.v.size()) != n)
      throw InvalidFan(who + " has wrong length");
    if (is_zero(r.b)) throw InvalidFan(who + " has b = 0");
    if (gcd_of(r.v) != 1) throw InvalidFan(who + " has non-primitive v");
  }
}

std::vector<RVec> TopologicalFan::betas(const std::vector<Vertex>& index) const {
  std::vector<RVec> out;
  for (auto i : index) out.push_back(beta(i));
  return out;
}

namespace {

std::vector<QVec> generators(const TopologicalFan& fan, const Simplex& s, ConeMode mode) {
  std::vector<QVec> g;
  for (auto i : s) g.push_back(mode == ConeMode::B ? fan.ray(i).b : to_qvec(fan.ray(i).v));
  return g;
}

// hyperplane normals of all walls of all facets
std::vector<QVec> wall_normals(const TopologicalFan& fan, ConeMode mode) {
  std::vector<QVec> out;
  const auto& k = fan.complex();
  for (const auto& f : k.facets()) {
    if (static_cast<int>(f.size()) != fan.dim()) continue;
    auto g = generators(fan, f, mode);
    for (std::size_t drop = 0; drop < g.size(); ++drop) {
      std::vector<QVec> rows;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (i != drop) rows.push_back(g[i]);
      out.push_back(cofactor_normal(rows));
    }
  }
  return out;
}

}  // namespace

FanConditionResult check_fan_condition(const TopologicalFan& fan) {
  FanConditionResult res;
  const int n = fan.dim();
  const auto& facets = fan.complex().facets();
  for (const auto& f : facets) {
    auto gb = generators(fan, f, ConeMode::B);
    auto gv = generators(fan, f, ConeMode::V);
    char bad = 0;
    if (static_cast<int>(f.size()) > n || rank(gb) < static_cast<int>(f.size())) bad = 'b';
    else if (rank(gv) < static_cast<int>(f.size())) bad = 'v';
    if (bad) {
      res.ok = false;
      res.dependent = f;
      res.dependent_part = bad;
      return res;
    }
  }
  for (std::size_t x = 0; x < facets.size(); ++x)
    for (std::size_t y = x + 1; y < facets.size(); ++y) {
      const auto& fi = facets[x];
      const auto& fj = facets[y];
      Simplex only_i = set_difference(fi, fj), both = set_intersection(fi, fj), only_j = set_difference(fj, fi);
      const std::size_t vars = only_i.size() + both.size() + only_j.size();
      QMatrix a(n + 1, QVec(vars));
      QVec rhs(n + 1);
      rhs[n] = 1;
      std::vector<bool> nonneg;
      std::size_t col = 0;
      for (auto i : only_i) {
        for (int k = 0; k < n; ++k) a[k][col] = fan.ray(i).b[k];
        a[n][col++] = 1;
        nonneg.push_back(true);
      }
      for (auto i : both) {
        for (int k = 0; k < n; ++k) a[k][col] = fan.ray(i).b[k];
        ++col;
        nonneg.push_back(false);
      }
      for (auto j : only_j) {
        for (int k = 0; k < n; ++k) a[k][col] = -fan.ray(j).b[k];
        ++col;
        nonneg.push_back(true);
      }
      auto sol = find_feasible_point(a, rhs, nonneg);
      if (!sol) continue;
      QVec point(n);
      col = 0;
      for (auto i : only_i) {
        for (int k = 0; k < n; ++k) point[k] += (*sol)[col] * fan.ray(i).b[k];
        ++col;
      }
      for (auto i : both) {
        if ((*sol)[col] > 0)
          for (int k = 0; k < n; ++k) point[k] += (*sol)[col] * fan.ray(i).b[k];
        ++col;
      }
      res.ok = false;
      res.overlap = std::make_pair(fi, fj);
      res.point = point;
      return res;
    }
  return res;
}

bool cone_contains(const TopologicalFan& fan, const Simplex& s, const QVec& x, ConeMode mode) {
  return in_cone(generators(fan, s, mode), x);
}

std::vector<Simplex> locate_cone(const TopologicalFan& fan, const QVec& x, ConeMode mode) {
  std::vector<Simplex> out;
  for (const auto& f : fan.complex().facets())
    if (cone_contains(fan, f, x, mode)) out.push_back(f);
  return out;
}

bool is_generic_direction(const TopologicalFan& fan, const QVec& x, ConeMode mode) {
  if (is_zero(x)) return false;
  for (const auto& f : fan.complex().facets()) {
    if (static_cast<int>(f.size()) != fan.dim()) continue;
    auto g = generators(fan, f, mode);
    for (std::size_t drop = 0; drop < g.size(); ++drop) {
      std::vector<QVec> wall;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (i != drop) wall.push_back(g[i]);
      if (dot(cofactor_normal(wall), x) == 0 && in_cone(wall, x)) return false;
    }
  }
  return true;
}

namespace {

QVec random_direction(std::mt19937_64& rng, int n, const std::vector<QVec>& normals) {
  std::uniform_int_distribution<int> dist(-997, 997);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    QVec x(n);
    for (auto& c : x) c = dist(rng);
    if (is_zero(x)) continue;
    bool ok = std::all_of(normals.begin(), normals.end(), [&](const QVec& nv) { return dot(nv, x) != 0; });
    if (ok) return x;
  }
  throw DegenerateDirection("no generic direction found");
}

}  // namespace

QVec random_generic_direction(const TopologicalFan& fan, ConeMode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_direction(rng, fan.dim(), wall_normals(fan, mode));
}

CompletenessResult check_complete(const TopologicalFan& fan, int samples, std::uint64_t seed) {
  CompletenessResult res;
  const int n = fan.dim();
  const auto& k = fan.complex();
  if (n == 0) return res;
  if (!purity_check(k) || k.dim() != n - 1) {
    res.ok = false;
    res.failure = "not-pure";
    return res;
  }
  auto fail_wall = [&](const char* why, const Simplex& w) {
    res.ok = false;
    res.failure = why;
    res.wall = w;
  };
  for (const auto& [wall, fs] : wall_incidence(k)) {
    if (fs.size() == 1) {
      fail_wall("wall-count", wall);
      // a point just across the free wall
      Vertex p = set_difference(k.facets()[fs[0]], wall).front();
      QVec base(n);
      for (auto w : wall)
        for (int c = 0; c < n; ++c) base[c] += fan.ray(w).b[c];
      Rational delta = 1;
      for (int t = 0; t < 12; ++t, delta /= 2) {
        QVec x = base;
        for (int c = 0; c < n; ++c) x[c] -= delta * fan.ray(p).b[c];
        if (locate_cone(fan, x).empty()) {
          res.failure = "uncovered";
          res.direction = x;
          break;
        }
      }
      return res;
    }
    if (fs.size() != 2) {
      fail_wall("wall-count", wall);
      return res;
    }
    std::vector<QVec> rows;
    for (auto w : wall) rows.push_back(fan.ray(w).b);
    QVec normal = cofactor_normal(rows);
    Vertex p = set_difference(k.facets()[fs[0]], wall).front();
    Vertex q = set_difference(k.facets()[fs[1]], wall).front();
    if (sign(dot(normal, fan.ray(p).b)) * sign(dot(normal, fan.ray(q).b)) != -1) {
      fail_wall("same-side", wall);
      return res;
    }
  }
  if (!is_connected(dual_graph(k))) {
    res.ok = false;
    res.failure = "disconnected";
    return res;
  }
  std::mt19937_64 rng(seed);
  auto normals = wall_normals(fan, ConeMode::B);
  for (int s = 0; s < samples; ++s) {
    QVec x = random_direction(rng, n, normals);
    auto hits = locate_cone(fan, x).size();
    ++res.samples_checked;
    if (hits != 1) {
      res.ok = false;
      res.failure = hits == 0 ? "uncovered" : "multiply-covered";
      res.direction = x;
      return res;
    }
  }
  return res;
}

NonsingularityResult check_nonsingular(const TopologicalFan& fan) {
  NonsingularityResult res;
  for (const auto& f : fan.complex().facets()) {
    std::vector<ZVec> rows;
    for (auto i : f) rows.push_back(fan.ray(i).v);
    Integer g = minor_gcd(rows);
    if (static_cast<int>(f.size()) == fan.dim()) res.facet_dets.push_back(determinant(rows));
    if (g != 1 && res.ok) {
      res.ok = false;
      res.facet = f;
      res.minor_gcd = g;
    }
  }
  return res;
}

bool check_involutive(const TopologicalFan& fan) {
  return std::all_of(fan.rays().begin(), fan.rays().end(), [](const Ray& r) { return is_zero(r.c); });
}

ValidationReport validate(const TopologicalFan& fan, std::uint64_t seed) {
  ValidationReport rep;
  rep.fan_condition = check_fan_condition(fan);
  if (rep.fan_condition.ok) {
    rep.completeness = check_complete(fan, 32, seed);
  } else {
    rep.completeness.ok = false;
    rep.completeness.failure = "fan-condition";
  }
  rep.nonsingularity = check_nonsingular(fan);
  rep.involutive = check_involutive(fan);
  return rep;
}

std::optional<RElem> h_multiplier(const Ray& beta, const Ray& target) {
  const std::size_t n = beta.b.size();
  if (target.b.size() != n) return std::nullopt;
  std::optional<Rational> scale;
  for (std::size_t k = 0; k < n && !scale; ++k)
    if (beta.b[k] != 0) scale = target.b[k] / beta.b[k];
  if (!scale || *scale <= 0) return std::nullopt;
  std::size_t pivot = n;
  for (std::size_t k = 0; k < n; ++k)
    if (beta.v[k] != 0) {
      pivot = k;
      break;
    }
  if (pivot == n) return std::nullopt;
  for (std::int64_t s : {1, -1}) {
    RElem mu{*scale, (target.c[pivot] - beta.c[pivot] * *scale) / beta.v[pivot], s};
    if (Ray::from_rvec(right_multiply(beta.as_rvec(), mu)) == target) return mu;
  }
  return std::nullopt;
}

std::optional<Equivalence> equivalent(const TopologicalFan& a, const TopologicalFan& b, EquivalenceMode mode) {
  if (a.dim() != b.dim() || a.ray_count() != b.ray_count()) return std::nullopt;
  auto multiplier = [&](Vertex i, Vertex j) -> std::optional<RElem> {
    const Ray& x = a.ray(i);
    const Ray& y = b.ray(j);
    if (x == y) return RElem::one();
    switch (mode) {
      case EquivalenceMode::Strict:
        return std::nullopt;
      case EquivalenceMode::D:
        if (Ray::from_rvec(right_multiply(x.as_rvec(), RElem::mu0())) == y) return RElem::mu0();
        return std::nullopt;
      case EquivalenceMode::H:
        return h_multiplier(x, y);
    }
    return std::nullopt;
  };
  auto sigma = find_isomorphism(a.complex(), b.complex(),
                                [&](Vertex i, Vertex j) { return multiplier(i, j).has_value(); });
  if (!sigma) return std::nullopt;
  Equivalence eq{*sigma, {}};
  for (Vertex i = 1; i <= a.ray_count(); ++i) eq.mu.push_back(*multiplier(i, (*sigma)[i - 1]));
  return eq;
}

TopologicalFan h_canonical_form(const TopologicalFan& fan) {
  std::vector<Ray> rays;
  for (const auto& r : fan.rays()) {
    Ray out = r;
    Rational s = l1_norm(r.b);
    for (auto& x : out.b) x /= s;
    auto first = std::find_if(r.v.begin(), r.v.end(), [](std::int64_t x) { return x != 0; });
    if (first != r.v.end() && *first < 0)
      for (auto& x : out.v) x = -x;
    QVec vq = to_qvec(r.v);
    Rational proj = dot(r.c, vq) / dot(vq, vq);
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = (r.c[k] - proj * vq[k]) / s;
    rays.push_back(std::move(out));
  }
  return TopologicalFan(fan.dim(), fan.complex(), std::move(rays));
}

}  // namespace topfan
