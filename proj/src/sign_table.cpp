#include "topfan/errors.hpp"
#include "topfan/realizability.hpp"

#include <algorithm>
#include <queue>

namespace topfan {

namespace {

int permutation_sign(std::vector<Vertex> from, const std::vector<Vertex>& to) {
  // sign of the permutation carrying `from` onto `to`
  int s = 1;
  for (std::size_t i = 0; i < to.size(); ++i) {
    auto it = std::find(from.begin() + i, from.end(), to[i]);
    std::size_t j = it - from.begin();
    if (j != i) {
      std::swap(from[i], from[j]);
      s = -s;
    }
  }
  return s;
}

// sign(g) relative to sign(f) across their shared wall
int relative_sign(const Simplex& f, const Simplex& g) {
  std::vector<Vertex> replaced = f;
  Vertex gone = 0, added = 0;
  for (auto v : f)
    if (std::find(g.begin(), g.end(), v) == g.end()) gone = v;
  for (auto v : g)
    if (std::find(f.begin(), f.end(), v) == f.end()) added = v;
  *std::find(replaced.begin(), replaced.end(), gone) = added;
  return -permutation_sign(replaced, g);
}

std::vector<std::size_t> path_to_root(std::size_t x, const std::vector<std::size_t>& parent) {
  std::vector<std::size_t> p{x};
  while (parent[p.back()] != p.back()) p.push_back(parent[p.back()]);
  return p;
}

}  // namespace

SignTableResult derive_sign_table(int m, const std::vector<Simplex>& ordered_facets, std::size_t seed_facet,
                                  int seed_sign) {
  std::vector<Simplex> sorted;
  for (const auto& f : ordered_facets) sorted.push_back(make_simplex(f));
  SimplicialComplex k(m, sorted);
  if (!purity_check(k)) throw InvalidComplex("sign table needs a pure complex");
  auto walls = wall_incidence(k);
  for (const auto& [w, fs] : walls)
    if (fs.size() != 2) throw InvalidComplex("sign table needs every wall in exactly two facets");
  auto adj = dual_graph(k);
  if (!is_connected(adj)) throw DisconnectedDualGraph("dual graph is disconnected");
  if (seed_facet >= ordered_facets.size()) throw BadParameters("seed facet out of range");

  const std::size_t nf = ordered_facets.size();
  std::vector<int> sign(nf, 0);
  std::vector<std::size_t> parent(nf);
  sign[seed_facet] = seed_sign >= 0 ? 1 : -1;
  parent[seed_facet] = seed_facet;
  std::queue<std::size_t> q;
  q.push(seed_facet);
  SignTableResult res;
  while (!q.empty()) {
    auto a = q.front();
    q.pop();
    for (auto b : adj[a]) {
      int expect = sign[a] * relative_sign(ordered_facets[a], ordered_facets[b]);
      if (sign[b] == 0) {
        sign[b] = expect;
        parent[b] = a;
        q.push(b);
      } else if (sign[b] != expect && res.contradiction_cycle.empty()) {
        auto pa = path_to_root(a, parent);
        auto pb = path_to_root(b, parent);
        // trim the common tail
        while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
          pa.pop_back();
          pb.pop_back();
        }
        res.contradiction_cycle = pa;
        for (std::size_t i = pb.size() - 1; i-- > 0;) res.contradiction_cycle.push_back(pb[i]);
        res.contradiction_cycle.push_back(a);
      }
    }
  }
  if (res.contradiction_cycle.empty()) res.table = SignTable{ordered_facets, sign};
  return res;
}

}  // namespace topfan
