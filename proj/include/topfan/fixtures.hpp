#pragma once

#include "topfan/fan.hpp"
#include "topfan/simplicial.hpp"

#include <map>
#include <string>
#include <vector>

namespace topfan::fixtures {

// b1=e1, b2=e2, b3=-e1, b4=-e1-e2; v3=-e1-2e2, v4=-e1-e2
TopologicalFan cp2_sharp_cp2();

struct LabeledComplex {
  SimplicialComplex complex;
  std::vector<Simplex> ordered_facets;  // vertex order as listed
  std::map<Vertex, std::string> labels;
};

// e1..e4 = 1..4, d1..d4 = 5..8; facets in table order No.1 .. No.19
LabeledComplex barnette_sphere();
std::vector<int> barnette_table_signs();
// labeling as printed: e's standard, v(d1)=(1,0,1,0), v(d2)=(1,1,0,0), v(d3)=(0,1,1,0), v(d4)=(1,1,1,1)
// (singular on No.9-11 and No.18-19)
std::vector<ZVec> barnette_printed_labeling();
// unimodular labeling from the deterministic bound-1 search pinned at No.1
std::vector<ZVec> barnette_found_labeling();
// b-vectors of a complete fan on the Barnette sphere (fixture data, checked by validation)
std::vector<ZVec> barnette_fan_directions();
TopologicalFan barnette_fan();

struct Embedded {
  SimplicialComplex complex;
  std::vector<QVec> positions;
};

Embedded tetrahedron();
Embedded octahedron();
Embedded icosahedron();

TopologicalFan projective_space_fan(int n);  // rays e1..en, -(e1+..+en)
TopologicalFan cp1_fan();

// exact convex hull facets of points in general position (brute force, 3d)
SimplicialComplex hull_complex(const std::vector<QVec>& points);

}  // namespace topfan::fixtures
