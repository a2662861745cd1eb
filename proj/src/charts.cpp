#include "topfan/charts.hpp"

#include "topfan/errors.hpp"

#include <algorithm>

namespace topfan {

namespace {

const Simplex& require_facet(const TopologicalFan& fan, const Simplex& s) {
  auto idx = fan.complex().facet_index(s);
  if (!idx || static_cast<int>(s.size()) != fan.dim()) {
    std::string txt;
    for (auto v : s) txt += std::to_string(v) + " ";
    throw NotAFacet("not a maximal facet: " + txt);
  }
  return fan.complex().facets()[*idx];
}

DualBasis facet_dual(const TopologicalFan& fan, const Simplex& f) {
  return dual_basis(std::vector<int>(f.begin(), f.end()), fan.betas(f));
}

}  // namespace

KernelPresentation kernel_presentation(const TopologicalFan& fan, const Simplex& facet) {
  const Simplex& base = require_facet(fan, facet);
  DualBasis dual = facet_dual(fan, base);
  KernelPresentation out{base, {}};
  const int m = fan.ray_count();
  for (Vertex k = 1; k <= m; ++k) {
    if (std::binary_search(base.begin(), base.end(), k)) continue;
    KernelGenerator g{k, RVec(m, RElem::zero())};
    g.exponents[k - 1] = RElem::one();
    RVec bk = fan.beta(k);
    for (auto i : base) g.exponents[i - 1] = -pairing(dual.alpha(i), bk);
    out.generators.push_back(std::move(g));
  }
  return out;
}

bool in_kernel(const TopologicalFan& fan, const RVec& exponents) {
  const int n = fan.dim();
  RVec total(n, RElem::zero());
  for (Vertex j = 1; j <= fan.ray_count(); ++j) {
    RVec bj = fan.beta(j);
    for (int l = 0; l < n; ++l) total[l] = total[l] + bj[l] * exponents[j - 1];
  }
  return std::all_of(total.begin(), total.end(), [](const RElem& x) { return x == RElem::zero(); });
}

RMatrix r_multiply(const RMatrix& a, const RMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  RMatrix c(a.size(), std::vector<RElem>(cols, RElem::zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

RMatrix r_identity(std::size_t n) {
  RMatrix id(n, std::vector<RElem>(n, RElem::zero()));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = RElem::one();
  return id;
}

ChartAtlas::ChartAtlas(const TopologicalFan& fan) : fan_(fan) {
  for (const auto& f : fan_.complex().facets())
    if (static_cast<int>(f.size()) == fan_.dim()) duals_.emplace(f, facet_dual(fan_, f));
}

const DualBasis& ChartAtlas::dual(const Simplex& facet) const {
  auto it = duals_.find(make_simplex(facet));
  if (it == duals_.end()) throw NotAFacet("no chart for the given simplex");
  return it->second;
}

void ChartAtlas::set_alpha(const Simplex& facet, Vertex i, const RVec& alpha) {
  auto it = duals_.find(make_simplex(facet));
  if (it == duals_.end()) throw NotAFacet("no chart for the given simplex");
  auto& d = it->second;
  for (std::size_t p = 0; p < d.index.size(); ++p)
    if (d.index[p] == i) d.alphas[p] = alpha;
}

TransitionMatrix transition_matrix(const ChartAtlas& atlas, const Simplex& source, const Simplex& target) {
  const auto& fan = atlas.fan();
  const Simplex& s = require_facet(fan, source);
  const Simplex& t = require_facet(fan, target);
  const DualBasis& dj = atlas.dual(t);
  TransitionMatrix out{s, t, {}};
  for (auto j : t) {
    std::vector<RElem> row;
    for (auto i : s) row.push_back(pairing(dj.alpha(j), fan.beta(i)));
    out.entries.push_back(std::move(row));
  }
  return out;
}

CocycleResult check_cocycle(const ChartAtlas& atlas) {
  CocycleResult res;
  std::vector<Simplex> facets;
  for (const auto& f : atlas.fan().complex().facets())
    if (static_cast<int>(f.size()) == atlas.fan().dim()) facets.push_back(f);
  const std::size_t nf = facets.size();
  std::vector<std::vector<RMatrix>> t(nf, std::vector<RMatrix>(nf));
  for (std::size_t a = 0; a < nf; ++a)
    for (std::size_t b = 0; b < nf; ++b) t[a][b] = transition_matrix(atlas, facets[a], facets[b]).entries;
  const RMatrix id = r_identity(atlas.fan().dim());
  for (std::size_t a = 0; a < nf; ++a)
    for (std::size_t b = 0; b < nf; ++b) {
      if (r_multiply(t[a][b], t[b][a]) != id) {
        res.ok = false;
        res.offending = {facets[a], facets[b], facets[a]};
        res.failed_identity = "T(I,J) T(J,I) = 1";
        return res;
      }
      for (std::size_t c = 0; c < nf; ++c) {
        ++res.triples_checked;
        if (r_multiply(t[b][c], t[a][b]) != t[a][c]) {
          res.ok = false;
          res.offending = {facets[a], facets[b], facets[c]};
          res.failed_identity = "T(J,K) T(I,J) = T(I,K)";
          return res;
        }
      }
    }
  return res;
}

bool check_conjugation_equivariant(const ChartAtlas& atlas) {
  const auto& facets = atlas.fan().complex().facets();
  for (const auto& a : facets)
    for (const auto& b : facets) {
      if (static_cast<int>(a.size()) != atlas.fan().dim() || static_cast<int>(b.size()) != atlas.fan().dim()) continue;
      for (const auto& row : transition_matrix(atlas, a, b).entries)
        for (const auto& x : row)
          if (x.c != 0) return false;
    }
  return true;
}

FacePoset orbit_face_poset(const TopologicalFan& fan) {
  FacePoset p;
  const auto& k = fan.complex();
  p.elements = k.all_faces();
  std::map<Simplex, std::size_t> where;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    const auto& e = p.elements[i];
    where[e] = i;
    p.rank.push_back(static_cast<int>(e.size()));
    std::string pattern(fan.ray_count(), '*');
    for (auto j : e) pattern[j - 1] = '0';
    p.cube_patterns.push_back(pattern);
  }
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    const auto& e = p.elements[i];
    for (std::size_t drop = 0; drop < e.size(); ++drop) {
      Simplex sub;
      for (std::size_t q = 0; q < e.size(); ++q)
        if (q != drop) sub.push_back(e[q]);
      p.covers.emplace_back(i, where.at(sub));
    }
  }
  return p;
}

}  // namespace topfan
