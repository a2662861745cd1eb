#pragma once

#include "topfan/rational.hpp"
#include "topfan/ring.hpp"
#include "topfan/simplicial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topfan {

struct Ray {
  QVec b;
  QVec c;
  ZVec v;

  static Ray ordinary(const ZVec& v);  // b = v, c = 0
  RVec as_rvec() const;
  static Ray from_rvec(const RVec& beta);
  bool operator==(const Ray& o) const { return b == o.b && c == o.c && v == o.v; }
};

class TopologicalFan {
 public:
  TopologicalFan() = default;
  // throws InvalidFan on shape errors, non-primitive v or zero b
  TopologicalFan(int n, SimplicialComplex complex, std::vector<Ray> rays);

  int dim() const { return n_; }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const Ray& ray(Vertex i) const { return rays_.at(i - 1); }
  RVec beta(Vertex i) const { return ray(i).as_rvec(); }
  std::vector<RVec> betas(const std::vector<Vertex>& index) const;

  bool operator==(const TopologicalFan& o) const { return n_ == o.n_ && complex_ == o.complex_ && rays_ == o.rays_; }

 private:
  int n_ = 0;
  SimplicialComplex complex_;
  std::vector<Ray> rays_;
};

enum class ConeMode { B, V };

struct FanConditionResult {
  bool ok = true;
  std::optional<Simplex> dependent;  // simplex with dependent vectors
  char dependent_part = 0;           // 'b' or 'v'
  std::optional<std::pair<Simplex, Simplex>> overlap;
  QVec point;  // in both cones, outside the cone of the intersection
};

struct CompletenessResult {
  bool ok = true;
  std::string failure;  // "not-pure", "wall-count", "same-side", "disconnected", "uncovered", "multiply-covered"
  std::optional<Simplex> wall;
  QVec direction;
  int samples_checked = 0;
};

struct NonsingularityResult {
  bool ok = true;
  std::optional<Simplex> facet;
  Integer minor_gcd = 1;
  std::vector<Integer> facet_dets;  // for facets of size n, in facet order
};

struct ValidationReport {
  FanConditionResult fan_condition;
  CompletenessResult completeness;
  NonsingularityResult nonsingularity;
  bool involutive = true;
  bool complete_nonsingular() const { return fan_condition.ok && completeness.ok && nonsingularity.ok; }
};

FanConditionResult check_fan_condition(const TopologicalFan& fan);
CompletenessResult check_complete(const TopologicalFan& fan, int samples = 32, std::uint64_t seed = 1);
NonsingularityResult check_nonsingular(const TopologicalFan& fan);
bool check_involutive(const TopologicalFan& fan);
ValidationReport validate(const TopologicalFan& fan, std::uint64_t seed = 1);

// facets whose b-cone (or v-cone) contains x
std::vector<Simplex> locate_cone(const TopologicalFan& fan, const QVec& x, ConeMode mode = ConeMode::B);
bool cone_contains(const TopologicalFan& fan, const Simplex& s, const QVec& x, ConeMode mode);

// x lies in no wall cone of a facet; random directions avoid the whole wall hyperplanes
bool is_generic_direction(const TopologicalFan& fan, const QVec& x, ConeMode mode);
QVec random_generic_direction(const TopologicalFan& fan, ConeMode mode, std::uint64_t seed);

enum class EquivalenceMode { Strict, D, H };

struct Equivalence {
  std::vector<Vertex> sigma;  // sigma[i-1] = image of i
  std::vector<RElem> mu;      // beta'_{sigma(i)} = beta_i mu_i
};

std::optional<Equivalence> equivalent(const TopologicalFan& a, const TopologicalFan& b, EquivalenceMode mode);
// mu in S with beta' = beta mu, if any
std::optional<RElem> h_multiplier(const Ray& beta, const Ray& target);

TopologicalFan h_canonical_form(const TopologicalFan& fan);

}  // namespace topfan
