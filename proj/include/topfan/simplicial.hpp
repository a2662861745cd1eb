#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace topfan {

using Vertex = int;                  // 1-based
using Simplex = std::vector<Vertex>;  // sorted, no repeats

Simplex make_simplex(std::vector<Vertex> vs);
bool is_subset(const Simplex& a, const Simplex& b);
Simplex set_union(const Simplex& a, const Simplex& b);
Simplex set_intersection(const Simplex& a, const Simplex& b);
Simplex set_difference(const Simplex& a, const Simplex& b);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // facets are sorted internally; the facet list order is kept
  SimplicialComplex(int m, std::vector<Simplex> facets);

  int vertex_count() const { return m_; }
  int dim() const { return dim_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  std::optional<std::size_t> facet_index(const Simplex& s) const;
  bool is_facet(const Simplex& s) const { return facet_index(s).has_value(); }
  bool contains(const Simplex& s) const;
  // all faces of cardinality k (k = 0 gives the empty face), sorted
  std::vector<Simplex> faces_of_size(int k) const;
  std::vector<Simplex> all_faces() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  bool operator==(const SimplicialComplex& other) const;

 private:
  int m_ = 0;
  int dim_ = -1;
  std::vector<Simplex> facets_;
  std::map<Simplex, std::size_t> index_;
};

struct Relabeled {
  SimplicialComplex complex;
  std::vector<Vertex> original;  // new vertex i+1 was original[i]
};

struct FVector {
  std::vector<long long> f;  // f_0 .. f_{n-1}
  std::vector<long long> h;  // h_0 .. h_n
};

struct Graph {
  int m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted
  bool adjacent(Vertex u, Vertex v) const;
  bool is_complete() const;
};

bool purity_check(const SimplicialComplex& k);
Relabeled link(const SimplicialComplex& k, Vertex v);
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& sigma);
SimplicialComplex suspend(const SimplicialComplex& k);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cyclic_polytope_boundary(int n, int m);
SimplicialComplex simplex_boundary(int n);  // boundary of the n-simplex, n+1 vertices
Graph one_skeleton(const SimplicialComplex& k);
FVector f_h_vectors(const SimplicialComplex& k);
long long euler_characteristic(const SimplicialComplex& k);

// walls (codim-1 faces of facets) and the facets containing them
std::map<Simplex, std::vector<std::size_t>> wall_incidence(const SimplicialComplex& k);
// facet adjacency through shared walls
std::vector<std::vector<std::size_t>> dual_graph(const SimplicialComplex& k);
bool is_connected(const std::vector<std::vector<std::size_t>>& graph);
bool is_pseudomanifold(const SimplicialComplex& k);
std::vector<Simplex> minimal_non_faces(const SimplicialComplex& k);

// lexicographically least vertex bijection sigma (sigma[i-1] = image of i)
// mapping facets onto facets; `allowed` filters candidate pairs
std::optional<std::vector<Vertex>> find_isomorphism(
    const SimplicialComplex& a, const SimplicialComplex& b,
    const std::function<bool(Vertex, Vertex)>& allowed = {});

}  // namespace topfan
