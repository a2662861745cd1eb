#include "topfan/errors.hpp"
#include "topfan/realizability.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace topfan {

namespace {

using Mask = std::uint64_t;

void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, Mask& best, std::size_t stop_at) {
  if (stop_at && static_cast<std::size_t>(std::popcount(best)) >= stop_at) return;
  if (!p && !x) {
    if (std::popcount(r) > std::popcount(best)) best = r;
    return;
  }
  if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
  Mask px = p | x;
  int pivot = std::countr_zero(px);
  Mask best_cover = 0;
  for (Mask t = px; t; t &= t - 1) {
    int u = std::countr_zero(t);
    if (std::popcount(p & adj[u]) > std::popcount(p & best_cover)) {
      best_cover = adj[u];
      pivot = u;
    }
  }
  for (Mask cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    Mask bit = Mask{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], best, stop_at);
    p &= ~bit;
    x |= bit;
  }
}

bool independent_mod2(std::vector<std::uint32_t> vecs) {
  // xor basis
  std::vector<std::uint32_t> basis;
  for (auto v : vecs) {
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v == 0) return false;
    basis.push_back(v);
    std::sort(basis.rbegin(), basis.rend());
  }
  return true;
}

}  // namespace

std::vector<Vertex> max_clique(const Graph& g, std::size_t stop_at) {
  if (g.m > 64) throw BadParameters("clique search supports at most 64 vertices");
  std::vector<Mask> adj(g.m, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u - 1] |= Mask{1} << (v - 1);
    adj[v - 1] |= Mask{1} << (u - 1);
  }
  Mask all = g.m == 64 ? ~Mask{0} : (Mask{1} << g.m) - 1;
  Mask best = 0;
  bron_kerbosch(adj, 0, all, 0, best, stop_at);
  std::vector<Vertex> out;
  for (Mask t = best; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

Mod2Result mod2_obstruction(const SimplicialComplex& k, int n, long long node_limit) {
  if (n < 1 || n > 30) throw BadParameters("mod-2 search needs 1 <= n <= 30");
  Mod2Result res;
  const int m = k.vertex_count();
  const std::size_t classes = (std::size_t{1} << n) - 1;
  auto clique = max_clique(one_skeleton(k), classes + 1);
  res.clique = clique;
  if (clique.size() > classes) {
    res.status = Mod2Result::Status::Infeasible;
    res.pigeonhole = true;
    return res;
  }
  for (const auto& f : k.facets())
    if (static_cast<int>(f.size()) > n) {
      res.status = Mod2Result::Status::Infeasible;
      return res;
    }
  std::vector<std::uint32_t> label(m + 1, 0);
  // pin the lexicographically first maximal facet
  const Simplex* pin = nullptr;
  for (const auto& f : k.facets())
    if (static_cast<int>(f.size()) == n && (!pin || f < *pin)) pin = &f;
  if (pin)
    for (std::size_t p = 0; p < pin->size(); ++p) label[(*pin)[p]] = 1u << p;
  std::vector<std::vector<std::size_t>> facets_of(m + 1);
  for (std::size_t i = 0; i < k.facets().size(); ++i)
    for (auto v : k.facets()[i]) facets_of[v].push_back(i);
  std::vector<Vertex> order;
  std::vector<bool> done(m + 1, false);
  for (Vertex v = 1; v <= m; ++v) done[v] = label[v] != 0;
  for (int step = 0; step < m; ++step) {
    Vertex best = 0;
    int best_score = -1;
    for (Vertex v = 1; v <= m; ++v) {
      if (done[v]) continue;
      int score = 0;
      for (auto fi : facets_of[v])
        for (auto w : k.facets()[fi]) score += done[w];
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    if (!best) break;
    done[best] = true;
    order.push_back(best);
  }
  bool budget = false;
  auto ok_at = [&](Vertex v) {
    for (auto fi : facets_of[v]) {
      std::vector<std::uint32_t> vecs;
      for (auto w : k.facets()[fi])
        if (label[w]) vecs.push_back(label[w]);
      if (!independent_mod2(vecs)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t step) -> bool {
    if (node_limit >= 0 && res.nodes >= node_limit) {
      budget = true;
      return false;
    }
    ++res.nodes;
    if (step == order.size()) return true;
    Vertex v = order[step];
    for (std::uint32_t c = 1; c <= classes; ++c) {
      label[v] = c;
      if (ok_at(v) && go(step + 1)) return true;
      if (budget) break;
    }
    label[v] = 0;
    return false;
  };
  if (go(0)) {
    res.status = Mod2Result::Status::Feasible;
    res.classes.assign(label.begin() + 1, label.end());
  } else {
    res.status = budget ? Mod2Result::Status::Unknown : Mod2Result::Status::Infeasible;
  }
  return res;
}

}  // namespace topfan
