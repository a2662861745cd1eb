#pragma once

#include "topfan/fan.hpp"
#include "topfan/linalg.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace topfan {

using Monomial = std::vector<int>;  // exponent vector
using Polynomial = std::map<Monomial, Rational>;

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b, int max_degree = -1);
Polynomial variable(int m, Vertex i);
int degree(const Monomial& mono);

struct CohomPresentation {
  int m = 0;
  std::vector<Simplex> sr_monomials;
  std::vector<ZVec> linear_relations;  // row k: coefficients <e_k, v_i>
};

CohomPresentation cohomology_presentation(const TopologicalFan& fan);

struct GradedClass {
  int degree = 0;                // k; cohomological degree 2k
  std::vector<Monomial> basis;   // exponent vectors over mu_1..mu_m
  QVec coords;
  bool integral = true;
  bool is_zero() const;
};

// Q[mu]/(SR + linear relations), degree by degree
class GradedQuotient {
 public:
  explicit GradedQuotient(const TopologicalFan& fan);
  int m() const { return m_; }
  int n() const { return n_; }
  int rank(int k) const;
  std::vector<Monomial> basis(int k) const;
  GradedClass normal_form(const Polynomial& p, int k) const;
  const std::vector<int>& free_variables() const { return free_; }

 private:
  struct Piece {
    std::vector<Monomial> columns;  // monomials in free variables, least preferred first
    std::map<Monomial, std::size_t> column_of;
    RowEchelon relations;
    std::vector<std::size_t> basis_columns;  // most preferred first
  };
  const Piece& piece(int k) const;
  Polynomial substitute(const Monomial& mono) const;  // result over free variables only

  int m_ = 0, n_ = 0;
  std::vector<int> free_;         // 0-based variable indices
  std::vector<QVec> linear_form_;  // mu_x as combination of free variables
  std::vector<Simplex> sr_;
  mutable std::map<int, Piece> pieces_;
};

std::vector<long long> betti_numbers(const TopologicalFan& fan);  // b_0, b_2, ..., b_2n
int graded_rank(const TopologicalFan& fan, int k);

struct PontrjaginClass {
  std::vector<GradedClass> by_degree;  // k = 0..n; p_j sits at k = 2j
  const GradedClass& p(int j) const { return by_degree.at(2 * j); }
};

PontrjaginClass pontrjagin_class(const TopologicalFan& fan);

struct OmniWeights {
  std::vector<Simplex> facets;
  std::vector<int> w;
  std::pair<int, int> w_plus_minus(std::size_t i) const { return w[i] > 0 ? std::make_pair(1, 0) : std::make_pair(0, 1); }
  int weight(const Simplex& facet) const;
};

OmniWeights omni_weights(const TopologicalFan& fan);

struct ToddResult {
  long long genus = 0;
  QVec direction;
  std::vector<Simplex> cones;
  std::vector<int> weights;
};

// throws DegenerateDirection if the direction lies on a v-cone wall
ToddResult todd_genus(const TopologicalFan& fan, const QVec& direction);
ToddResult todd_genus(const TopologicalFan& fan, std::uint64_t seed);

}  // namespace topfan
