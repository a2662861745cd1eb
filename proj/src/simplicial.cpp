#include "topfan/simplicial.hpp"

#include "topfan/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace topfan {

Simplex make_simplex(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool is_subset(const Simplex& a, const Simplex& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Simplex set_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

std::string show(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

template <class F>
void for_each_subset(const Simplex& s, int k, F&& f) {
  const int n = static_cast<int>(s.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Simplex sub(k);
  while (true) {
    for (int i = 0; i < k; ++i) sub[i] = s[idx[i]];
    f(sub);
    int i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (int j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<Simplex> facets) : m_(m) {
  if (m < 0) throw InvalidComplex("negative vertex count");
  std::vector<bool> seen(m + 1, false);
  for (auto& f : facets) {
    Simplex sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidComplex("repeated vertex in facet " + show(sorted));
    if (sorted.empty()) throw InvalidComplex("empty facet");
    for (auto v : sorted) {
      if (v < 1 || v > m) throw VertexOutOfRange("vertex " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
      seen[v] = true;
    }
    f = std::move(sorted);
    dim_ = std::max(dim_, static_cast<int>(f.size()) - 1);
  }
  for (int v = 1; v <= m; ++v)
    if (!seen[v]) throw InvalidComplex("vertex " + std::to_string(v) + " lies in no facet");
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && is_subset(facets[i], facets[j]))
        throw InvalidComplex("facet " + show(facets[i]) + " is contained in " + show(facets[j]));
  facets_ = std::move(facets);
  for (std::size_t i = 0; i < facets_.size(); ++i) index_[facets_[i]] = i;
}

std::optional<std::size_t> SimplicialComplex::facet_index(const Simplex& s) const {
  auto it = index_.find(make_simplex(s));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  Simplex t = make_simplex(s);
  if (t.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return is_subset(t, f); });
}

std::vector<Simplex> SimplicialComplex::faces_of_size(int k) const {
  std::set<Simplex> out;
  if (k == 0) return {Simplex{}};
  for (const auto& f : facets_) for_each_subset(f, k, [&](const Simplex& s) { out.insert(s); });
  return {out.begin(), out.end()};
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dim_ + 1; ++k) {
    auto layer = faces_of_size(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Vertex> SimplicialComplex::neighbors(Vertex v) const {
  std::set<Vertex> out;
  for (const auto& f : facets_)
    if (std::binary_search(f.begin(), f.end(), v))
      for (auto w : f)
        if (w != v) out.insert(w);
  return {out.begin(), out.end()};
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (m_ != other.m_ || facets_.size() != other.facets_.size()) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return other.is_facet(f); });
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool Graph::is_complete() const {
  return static_cast<long long>(edges.size()) == static_cast<long long>(m) * (m - 1) / 2;
}

bool purity_check(const SimplicialComplex& k) {
  return std::all_of(k.facets().begin(), k.facets().end(),
                     [&](const Simplex& f) { return static_cast<int>(f.size()) == k.dim() + 1; });
}

Relabeled link(const SimplicialComplex& k, Vertex v) {
  if (v < 1 || v > k.vertex_count()) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
  Relabeled out;
  out.original = k.neighbors(v);
  std::map<Vertex, Vertex> relabel;
  for (std::size_t i = 0; i < out.original.size(); ++i) relabel[out.original[i]] = static_cast<Vertex>(i + 1);
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v) || f.size() == 1) continue;
    Simplex g;
    for (auto w : f)
      if (w != v) g.push_back(relabel[w]);
    facets.push_back(make_simplex(g));
  }
  out.complex = SimplicialComplex(static_cast<int>(out.original.size()), std::move(facets));
  return out;
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma) {
  auto idx = k.facet_index(sigma);
  if (!idx) throw NotAFacet("not a facet: " + show(make_simplex(sigma)));
  if (sigma.size() < 2) throw BadParameters("cannot subdivide a single vertex");
  const Vertex x = k.vertex_count() + 1;
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < k.facets().size(); ++i)
    if (i != *idx) facets.push_back(k.facets()[i]);
  const Simplex& s = k.facets()[*idx];
  for (auto j : s) {
    Simplex g;
    for (auto w : s)
      if (w != j) g.push_back(w);
    g.push_back(x);
    facets.push_back(g);
  }
  return SimplicialComplex(x, std::move(facets));
}

SimplicialComplex suspend(const SimplicialComplex& k) {
  const Vertex north = k.vertex_count() + 1, south = k.vertex_count() + 2;
  std::vector<Simplex> facets;
  for (Vertex pole : {north, south})
    for (const auto& f : k.facets()) {
      Simplex g = f;
      g.push_back(pole);
      facets.push_back(g);
    }
  if (k.facets().empty()) facets = {{north}, {south}};
  return SimplicialComplex(k.vertex_count() + 2, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int shift = a.vertex_count();
  std::vector<Simplex> facets;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) {
      Simplex h = f;
      for (auto w : g) h.push_back(w + shift);
      facets.push_back(h);
    }
  return SimplicialComplex(a.vertex_count() + b.vertex_count(), std::move(facets));
}

SimplicialComplex cyclic_polytope_boundary(int n, int m) {
  if (n < 2 || m <= n) throw BadParameters("cyclic polytope needs m > n >= 2");
  Simplex all(m);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Simplex> facets;
  for_each_subset(all, n, [&](const Simplex& s) {
    std::vector<bool> in(m + 2, false);
    for (auto v : s) in[v] = true;
    // Gale evenness: interior runs have even length
    for (int i = 1; i <= m;) {
      if (!in[i]) {
        ++i;
        continue;
      }
      int j = i;
      while (j <= m && in[j]) ++j;
      if (i > 1 && j <= m && (j - i) % 2 == 1) return;
      i = j;
    }
    facets.push_back(s);
  });
  return SimplicialComplex(m, std::move(facets));
}

SimplicialComplex simplex_boundary(int n) {
  if (n < 1) throw BadParameters("simplex boundary needs n >= 1");
  Simplex all(n + 1);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Simplex> facets;
  for_each_subset(all, n, [&](const Simplex& s) { facets.push_back(s); });
  return SimplicialComplex(n + 1, std::move(facets));
}

Graph one_skeleton(const SimplicialComplex& k) {
  Graph g;
  g.m = k.vertex_count();
  for (const auto& e : k.faces_of_size(2)) g.edges.emplace_back(e[0], e[1]);
  return g;
}

FVector f_h_vectors(const SimplicialComplex& k) {
  FVector out;
  const int n = k.dim() + 1;
  for (int i = 0; i < n; ++i) out.f.push_back(static_cast<long long>(k.faces_of_size(i + 1).size()));
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int kk = 0; kk <= n; ++kk) {
    long long h = 0;
    for (int i = 0; i <= kk; ++i) {
      long long f = i == 0 ? 1 : out.f[i - 1];
      long long term = binom(n - i, kk - i) * f;
      h += ((kk - i) % 2 == 0) ? term : -term;
    }
    out.h.push_back(h);
  }
  return out;
}

long long euler_characteristic(const SimplicialComplex& k) {
  auto fv = f_h_vectors(k);
  long long chi = 0;
  for (std::size_t i = 0; i < fv.f.size(); ++i) chi += (i % 2 == 0) ? fv.f[i] : -fv.f[i];
  return chi;
}

std::map<Simplex, std::vector<std::size_t>> wall_incidence(const SimplicialComplex& k) {
  std::map<Simplex, std::vector<std::size_t>> walls;
  for (std::size_t i = 0; i < k.facets().size(); ++i) {
    const auto& f = k.facets()[i];
    for_each_subset(f, static_cast<int>(f.size()) - 1, [&](const Simplex& w) { walls[w].push_back(i); });
  }
  return walls;
}

std::vector<std::vector<std::size_t>> dual_graph(const SimplicialComplex& k) {
  std::vector<std::vector<std::size_t>> adj(k.facets().size());
  for (const auto& [wall, fs] : wall_incidence(k))
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        adj[fs[a]].push_back(fs[b]);
        adj[fs[b]].push_back(fs[a]);
      }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

bool is_connected(const std::vector<std::vector<std::size_t>>& graph) {
  if (graph.empty()) return true;
  std::vector<bool> seen(graph.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto w : graph[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == graph.size();
}

bool is_pseudomanifold(const SimplicialComplex& k) {
  if (!purity_check(k)) return false;
  for (const auto& [wall, fs] : wall_incidence(k))
    if (fs.size() != 2) return false;
  return is_connected(dual_graph(k));
}

std::vector<Simplex> minimal_non_faces(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  const int m = k.vertex_count();
  for (int size = 2; size <= k.dim() + 2; ++size) {
    for (const auto& t : k.faces_of_size(size - 1)) {
      for (Vertex x = t.back() + 1; x <= m; ++x) {
        Simplex s = t;
        s.push_back(x);
        if (k.contains(s)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < s.size() && minimal; ++drop) {
          Simplex sub;
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) sub.push_back(s[i]);
          minimal = k.contains(sub);
        }
        if (minimal) out.push_back(s);
      }
    }
  }
  return out;
}

namespace {

struct IsoSearch {
  const SimplicialComplex& a;
  const SimplicialComplex& b;
  const std::function<bool(Vertex, Vertex)>& allowed;
  std::vector<std::vector<std::size_t>> facets_of;  // in a
  std::vector<int> deg_a, deg_b;
  std::vector<Vertex> sigma;
  std::vector<bool> used;

  bool image_ok(const Simplex& f) const {
    Simplex img;
    for (auto w : f)
      if (sigma[w - 1]) img.push_back(sigma[w - 1]);
    img = make_simplex(img);
    if (img.size() == f.size()) return b.is_facet(img);
    for (const auto& g : b.facets())
      if (g.size() == f.size() && is_subset(img, g)) return true;
    return false;
  }

  bool run(Vertex v) {
    if (v > a.vertex_count()) return true;
    for (Vertex w = 1; w <= b.vertex_count(); ++w) {
      if (used[w] || deg_a[v] != deg_b[w]) continue;
      if (allowed && !allowed(v, w)) continue;
      sigma[v - 1] = w;
      used[w] = true;
      bool ok = true;
      for (auto fi : facets_of[v])
        if (!image_ok(a.facets()[fi])) {
          ok = false;
          break;
        }
      if (ok && run(v + 1)) return true;
      sigma[v - 1] = 0;
      used[w] = false;
    }
    return false;
  }
};

std::vector<int> degrees(const SimplicialComplex& k) {
  std::vector<int> deg(k.vertex_count() + 1, 0);
  for (const auto& f : k.facets())
    for (auto v : f) deg[v] += 1 + 1000 * static_cast<int>(f.size());
  return deg;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                                    const std::function<bool(Vertex, Vertex)>& allowed) {
  if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size()) return std::nullopt;
  std::vector<std::size_t> sa, sb;
  for (const auto& f : a.facets()) sa.push_back(f.size());
  for (const auto& f : b.facets()) sb.push_back(f.size());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  IsoSearch s{a, b, allowed, {}, degrees(a), degrees(b), std::vector<Vertex>(a.vertex_count(), 0),
              std::vector<bool>(b.vertex_count() + 1, false)};
  s.facets_of.resize(a.vertex_count() + 1);
  for (std::size_t i = 0; i < a.facets().size(); ++i)
    for (auto v : a.facets()[i]) s.facets_of[v].push_back(i);
  if (!s.run(1)) return std::nullopt;
  return s.sigma;
}

}  // namespace topfan
