#include "doctest.h"

#include "topfan/errors.hpp"
#include "topfan/fixtures.hpp"
#include "topfan/simplicial.hpp"

#include <algorithm>

using namespace topfan;

namespace {

SimplicialComplex square() { return SimplicialComplex(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("construction rejects malformed complexes") {
  CHECK_THROWS_AS(SimplicialComplex(3, {{1, 2}, {1, 2, 3}}), InvalidComplex);
  CHECK_THROWS_AS(SimplicialComplex(3, {{1, 2}}), InvalidComplex);
  CHECK_THROWS_AS(SimplicialComplex(2, {{1, 3}}), VertexOutOfRange);
  CHECK_THROWS_AS(SimplicialComplex(2, {{1, 1}}), InvalidComplex);
  auto k = square();
  CHECK(k.facets()[3] == Simplex{1, 4});
  CHECK(k.contains({3}));
  CHECK_FALSE(k.contains({1, 3}));
}

TEST_CASE("purity") {
  CHECK(purity_check(square()));
  CHECK_FALSE(purity_check(SimplicialComplex(3, {{1, 2}, {3}})));
  CHECK(purity_check(fixtures::barnette_sphere().complex));
}

TEST_CASE("link") {
  auto l = link(square(), 1);
  CHECK(l.original == std::vector<Vertex>{2, 4});
  CHECK(l.complex.facets() == std::vector<Simplex>{{1}, {2}});
  CHECK_THROWS_AS(link(square(), 5), VertexOutOfRange);

  auto oct = fixtures::octahedron().complex;
  for (Vertex v = 1; v <= 6; ++v) {
    auto lv = link(oct, v);
    CHECK(find_isomorphism(lv.complex, square()).has_value());
  }

  auto s = suspend(square());
  auto ln = link(s, 5);
  CHECK(ln.complex == square());
  auto ls = link(s, 6);
  CHECK(ls.complex == square());
}

TEST_CASE("stellar subdivision") {
  auto p = stellar_subdivide(square(), {1, 2});
  CHECK(p.vertex_count() == 5);
  CHECK(p.facets().size() == 5);
  CHECK(find_isomorphism(p, cyclic_polytope_boundary(2, 5)).has_value());
  CHECK(stellar_subdivide(simplex_boundary(3), {1, 2, 3}).facets().size() == 6);
  CHECK_THROWS_AS(stellar_subdivide(square(), {1, 3}), NotAFacet);

  auto b = fixtures::barnette_sphere().complex;
  auto bs = stellar_subdivide(b, {5, 6, 7, 8});
  CHECK(bs.facets().size() == 22);
  CHECK(bs.vertex_count() == 9);
  CHECK(f_h_vectors(bs).f.back() == f_h_vectors(b).f.back() + 3);
}

TEST_CASE("suspension") {
  auto two = SimplicialComplex(2, {{1}, {2}});
  CHECK(find_isomorphism(suspend(two), square()).has_value());
  CHECK(find_isomorphism(suspend(square()), fixtures::octahedron().complex).has_value());

  // f-vector of a suspension against brute force
  auto k = stellar_subdivide(square(), {2, 3});
  auto s = suspend(k);
  auto fk = f_h_vectors(k).f;
  auto fs = f_h_vectors(s).f;
  REQUIRE(fs.size() == fk.size() + 1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    long long expect = (i < fk.size() ? fk[i] : 0) + 2 * (i == 0 ? 1 : fk[i - 1]);
    CHECK(fs[i] == expect);
    CHECK(fs[i] == static_cast<long long>(s.faces_of_size(static_cast<int>(i) + 1).size()));
  }
}

TEST_CASE("cyclic polytopes") {
  CHECK(find_isomorphism(cyclic_polytope_boundary(2, 5), stellar_subdivide(square(), {1, 2})).has_value());
  CHECK(one_skeleton(cyclic_polytope_boundary(4, 8)).is_complete());
  CHECK(one_skeleton(cyclic_polytope_boundary(4, 16)).is_complete());
  CHECK_FALSE(one_skeleton(cyclic_polytope_boundary(3, 6)).is_complete());
  for (int m = 4; m <= 9; ++m) {
    auto c = cyclic_polytope_boundary(3, m);
    auto f = f_h_vectors(c).f;
    CHECK(f[2] == 2 * m - 4);
    CHECK(f[0] - f[1] + f[2] == 2);
    CHECK(is_pseudomanifold(c));
  }
  CHECK_THROWS_AS(cyclic_polytope_boundary(4, 4), BadParameters);
  CHECK_THROWS_AS(cyclic_polytope_boundary(1, 4), BadParameters);
}

TEST_CASE("f and h vectors") {
  auto sq = f_h_vectors(square());
  CHECK(sq.f == std::vector<long long>{4, 4});
  CHECK(sq.h == std::vector<long long>{1, 2, 1});
  auto oct = f_h_vectors(fixtures::octahedron().complex);
  CHECK(oct.f == std::vector<long long>{6, 12, 8});
  CHECK(oct.h == std::vector<long long>{1, 3, 3, 1});
  for (int n = 1; n <= 5; ++n) {
    auto f = f_h_vectors(simplex_boundary(n)).f;
    for (int k = 0; k < n; ++k) CHECK(f[k] == binom(n + 1, k + 1));
  }
  auto bh = f_h_vectors(fixtures::barnette_sphere().complex);
  CHECK(bh.f == std::vector<long long>{8, 27, 38, 19});
  CHECK(euler_characteristic(fixtures::barnette_sphere().complex) == 0);
  long long total = 0;
  for (auto x : bh.h) total += x;
  CHECK(total == 19);
}

TEST_CASE("pseudomanifold and minimal non-faces") {
  CHECK(is_pseudomanifold(square()));
  CHECK_FALSE(is_pseudomanifold(SimplicialComplex(3, {{1, 2}, {2, 3}})));
  auto mnf = minimal_non_faces(square());
  CHECK(mnf == std::vector<Simplex>{{1, 3}, {2, 4}});
  CHECK(minimal_non_faces(simplex_boundary(3)) == std::vector<Simplex>{{1, 2, 3, 4}});
}

TEST_CASE("isomorphism is lexicographically least") {
  auto a = square();
  auto b = SimplicialComplex(4, {{1, 3}, {3, 2}, {2, 4}, {4, 1}});
  auto s = find_isomorphism(a, b);
  REQUIRE(s);
  CHECK(*s == std::vector<Vertex>{1, 3, 2, 4});
  CHECK_FALSE(find_isomorphism(square(), simplex_boundary(3)).has_value());
  auto self = find_isomorphism(fixtures::barnette_sphere().complex, fixtures::barnette_sphere().complex);
  REQUIRE(self);
  CHECK(*self == std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7, 8});
}
