#include "topfan/errors.hpp"
#include "topfan/realizability.hpp"

#include <algorithm>
#include <functional>

namespace topfan {

TopologicalFan stellar_subdivide_fan(const TopologicalFan& fan, const Simplex& sigma) {
  auto idx = fan.complex().facet_index(sigma);
  if (!idx || static_cast<int>(sigma.size()) != fan.dim()) throw NotAFacet("stellar subdivision needs a maximal facet");
  const int n = fan.dim();
  Ray added{QVec(n), QVec(n), ZVec(n, 0)};
  for (auto j : fan.complex().facets()[*idx]) {
    const Ray& r = fan.ray(j);
    for (int k = 0; k < n; ++k) {
      added.b[k] += r.b[k];
      added.c[k] += r.c[k];
      added.v[k] += r.v[k];
    }
  }
  std::vector<Ray> rays = fan.rays();
  rays.push_back(std::move(added));
  return TopologicalFan(n, stellar_subdivide(fan.complex(), sigma), std::move(rays));
}

namespace {

Ray pad(const Ray& r, int before, int after) {
  Ray out;
  out.b.assign(before, 0);
  out.c.assign(before, 0);
  out.v.assign(before, 0);
  out.b.insert(out.b.end(), r.b.begin(), r.b.end());
  out.c.insert(out.c.end(), r.c.begin(), r.c.end());
  out.v.insert(out.v.end(), r.v.begin(), r.v.end());
  out.b.resize(out.b.size() + after, 0);
  out.c.resize(out.c.size() + after, 0);
  out.v.resize(out.v.size() + after, 0);
  return out;
}

}  // namespace

TopologicalFan suspend_fan(const TopologicalFan& fan) {
  const int n = fan.dim();
  std::vector<Ray> rays;
  for (const auto& r : fan.rays()) rays.push_back(pad(r, 0, 1));
  for (int s : {1, -1}) {
    ZVec e(n + 1, 0);
    e[n] = s;
    rays.push_back(Ray::ordinary(e));
  }
  return TopologicalFan(n + 1, suspend(fan.complex()), std::move(rays));
}

TopologicalFan product_fan(const TopologicalFan& a, const TopologicalFan& b) {
  std::vector<Ray> rays;
  for (const auto& r : a.rays()) rays.push_back(pad(r, 0, b.dim()));
  for (const auto& r : b.rays()) rays.push_back(pad(r, a.dim(), 0));
  return TopologicalFan(a.dim() + b.dim(), join(a.complex(), b.complex()), std::move(rays));
}

TopologicalFan realize_2sphere(const SimplicialComplex& k, const std::vector<QVec>& positions, long long node_limit) {
  if (k.dim() != 2 || !is_pseudomanifold(k)) throw InvalidComplex("realize_2sphere needs a 2-dimensional pseudomanifold");
  const int m = k.vertex_count();
  if (static_cast<int>(positions.size()) != m) throw BadParameters("one position per vertex required");
  for (const auto& p : positions)
    if (p.size() != 3 || is_zero(p)) throw NotStarShaped("positions must be nonzero 3-vectors");

  // proper 4-colouring of the 1-skeleton
  auto g = one_skeleton(k);
  std::vector<std::vector<Vertex>> adj(m + 1);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Vertex> order;
  std::vector<bool> placed(m + 1, false);
  for (int step = 0; step < m; ++step) {
    Vertex best = 0;
    int score = -1;
    for (Vertex v = 1; v <= m; ++v) {
      if (placed[v]) continue;
      int s = 0;
      for (auto w : adj[v]) s += placed[w];
      if (s > score) {
        score = s;
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::vector<int> color(m + 1, -1);
  long long nodes = 0;
  bool tripped = false;
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    if (node_limit >= 0 && ++nodes > node_limit) {
      tripped = true;
      return false;
    }
    Vertex v = order[i];
    for (int c = 0; c < 4; ++c) {
      bool ok = std::none_of(adj[v].begin(), adj[v].end(), [&](Vertex w) { return color[w] == c; });
      if (!ok) continue;
      color[v] = c;
      if (go(i + 1)) return true;
      if (tripped) break;
    }
    color[v] = -1;
    return false;
  };
  if (!go(0)) throw NoColoringFound(tripped ? "colouring search exceeded its node budget" : "no 4-colouring exists");

  const ZVec palette[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  std::vector<Ray> rays;
  for (Vertex v = 1; v <= m; ++v) rays.push_back(Ray{positions[v - 1], QVec(3), palette[color[v]]});
  TopologicalFan fan(3, k, std::move(rays));
  auto fc = check_fan_condition(fan);
  if (!fc.ok) throw NotStarShaped("cones over the positions overlap");
  auto comp = check_complete(fan);
  if (!comp.ok) throw NotStarShaped("cones over the positions do not cover R^3: " + comp.failure);
  return fan;
}

}  // namespace topfan
