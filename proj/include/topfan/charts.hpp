#pragma once

#include "topfan/fan.hpp"
#include "topfan/ring.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace topfan {

struct KernelGenerator {
  Vertex k = 0;
  RVec exponents;  // length m, exponents[j-1] = E_j
};

struct KernelPresentation {
  Simplex base;
  std::vector<KernelGenerator> generators;
};

KernelPresentation kernel_presentation(const TopologicalFan& fan, const Simplex& facet);
// sum_j beta_j E_j == 0
bool in_kernel(const TopologicalFan& fan, const RVec& exponents);

using RMatrix = std::vector<std::vector<RElem>>;
RMatrix r_multiply(const RMatrix& a, const RMatrix& b);
RMatrix r_identity(std::size_t n);

struct TransitionMatrix {
  Simplex source, target;
  RMatrix entries;  // rows j in target, columns i in source
};

class ChartAtlas {
 public:
  explicit ChartAtlas(const TopologicalFan& fan);
  const TopologicalFan& fan() const { return fan_; }
  const DualBasis& dual(const Simplex& facet) const;
  // for negative controls
  void set_alpha(const Simplex& facet, Vertex i, const RVec& alpha);

 private:
  TopologicalFan fan_;
  std::map<Simplex, DualBasis> duals_;
};

TransitionMatrix transition_matrix(const ChartAtlas& atlas, const Simplex& source, const Simplex& target);

struct CocycleResult {
  bool ok = true;
  std::optional<std::array<Simplex, 3>> offending;
  std::string failed_identity;
  long long triples_checked = 0;
};

CocycleResult check_cocycle(const ChartAtlas& atlas);
bool check_conjugation_equivariant(const ChartAtlas& atlas);

struct FacePoset {
  std::vector<Simplex> elements;                  // by size, then lex; elements[0] is the empty face
  std::vector<int> rank;                          // |J|
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper): upper = lower minus one vertex
  std::vector<std::string> cube_patterns;         // '0' for j in J, '*' otherwise
};

FacePoset orbit_face_poset(const TopologicalFan& fan);

}  // namespace topfan
