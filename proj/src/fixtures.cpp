#include "topfan/fixtures.hpp"

#include "topfan/linalg.hpp"
#include "topfan/realizability.hpp"

#include <algorithm>

namespace topfan::fixtures {

TopologicalFan cp2_sharp_cp2() {
  SimplicialComplex k(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  auto ray = [](QVec b, ZVec v) { return Ray{std::move(b), QVec(2), std::move(v)}; };
  std::vector<Ray> rays{ray({1, 0}, {1, 0}), ray({0, 1}, {0, 1}), ray({-1, 0}, {-1, -2}), ray({-1, -1}, {-1, -1})};
  return TopologicalFan(2, std::move(k), std::move(rays));
}

LabeledComplex barnette_sphere() {
  // e1 e2 e3 e4 d1 d2 d3 d4
  enum : Vertex { e1 = 1, e2, e3, e4, d1, d2, d3, d4 };
  std::vector<Simplex> table{
      {e1, e2, e3, e4}, {d1, e2, e3, e4}, {e1, d2, e3, e4}, {e1, e2, d3, e4}, {e1, e2, e3, d4},
      {d1, d2, e3, e4}, {e1, d2, d3, e4}, {d1, e2, d3, e4}, {e1, d2, e3, d3}, {e1, e2, d3, d1},
      {d1, e2, e3, d2}, {e1, e2, d1, d4}, {e1, d3, e3, d4}, {d2, e2, e3, d4}, {e1, d1, d3, d4},
      {d1, e2, d2, d4}, {d3, d2, e3, d4}, {d1, d2, d3, e4}, {d1, d2, d3, d4}};
  LabeledComplex out{SimplicialComplex(8, table), table, {}};
  const char* names[] = {"e1", "e2", "e3", "e4", "d1", "d2", "d3", "d4"};
  for (Vertex v = 1; v <= 8; ++v) out.labels[v] = names[v - 1];
  return out;
}

std::vector<int> barnette_table_signs() { return {1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1}; }

std::vector<ZVec> barnette_printed_labeling() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
          {1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 1}};
}

std::vector<ZVec> barnette_found_labeling() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
          {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 1}};
}

std::vector<ZVec> barnette_fan_directions() {
  return {{0, 0, 3, 4},  {-4, 0, -2, 1}, {-3, -3, 1, 0}, {1, -4, -1, -4},
          {-1, 1, -2, -3}, {1, -2, 2, -2}, {4, 3, 3, 4},   {-1, 4, 4, -1}};
}

TopologicalFan barnette_fan() {
  auto b = barnette_fan_directions();
  auto v = barnette_found_labeling();
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < b.size(); ++i) rays.push_back(Ray{to_qvec(b[i]), QVec(4), v[i]});
  return TopologicalFan(4, barnette_sphere().complex, std::move(rays));
}

SimplicialComplex hull_complex(const std::vector<QVec>& points) {
  const std::size_t m = points.size();
  std::vector<Simplex> facets;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        QVec u(3), w(3);
        for (int k = 0; k < 3; ++k) {
          u[k] = points[b][k] - points[a][k];
          w[k] = points[c][k] - points[a][k];
        }
        QVec normal = cofactor_normal({u, w});
        int pos = 0, neg = 0;
        for (std::size_t p = 0; p < m; ++p) {
          if (p == a || p == b || p == c) continue;
          QVec d(3);
          for (int k = 0; k < 3; ++k) d[k] = points[p][k] - points[a][k];
          int s = sign(dot(normal, d));
          pos += s > 0;
          neg += s < 0;
        }
        if (pos == 0 || neg == 0)
          facets.push_back({static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1), static_cast<Vertex>(c + 1)});
      }
  return SimplicialComplex(static_cast<int>(m), std::move(facets));
}

Embedded tetrahedron() {
  std::vector<QVec> p{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return {hull_complex(p), p};
}

Embedded octahedron() {
  std::vector<QVec> p{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return {hull_complex(p), p};
}

Embedded icosahedron() {
  // (0, +-1, +-t) and cyclic shifts, t a rational stand-in for the golden ratio
  const Rational t(809, 500);
  std::vector<QVec> p;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      p.push_back({0, Rational(s1), s2 * t});
      p.push_back({Rational(s1), s2 * t, 0});
      p.push_back({s2 * t, 0, Rational(s1)});
    }
  return {hull_complex(p), p};
}

TopologicalFan projective_space_fan(int n) {
  SimplicialComplex k = simplex_boundary(n);
  std::vector<Ray> rays;
  for (int i = 0; i < n; ++i) {
    ZVec e(n, 0);
    e[i] = 1;
    rays.push_back(Ray::ordinary(e));
  }
  rays.push_back(Ray::ordinary(ZVec(n, -1)));
  return TopologicalFan(n, std::move(k), std::move(rays));
}

TopologicalFan cp1_fan() { return projective_space_fan(1); }

}  // namespace topfan::fixtures
