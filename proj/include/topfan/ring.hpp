#pragma once

#include "topfan/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace topfan {

// the matrix [[b,0],[c,v]]
struct RElem {
  Rational b = 0;
  Rational c = 0;
  std::int64_t v = 0;

  static RElem one() { return {1, 0, 1}; }
  static RElem zero() { return {0, 0, 0}; }
  static RElem mu0() { return {1, 0, -1}; }

  bool operator==(const RElem& o) const { return b == o.b && c == o.c && v == o.v; }
  bool operator!=(const RElem& o) const { return !(*this == o); }
};

RElem operator+(const RElem& x, const RElem& y);
RElem operator-(const RElem& x, const RElem& y);
RElem operator-(const RElem& x);
// x*y is the matrix product x.y; r_mul(m2, m1) = m2*m1
RElem operator*(const RElem& x, const RElem& y);
inline RElem r_mul(const RElem& mu2, const RElem& mu1) { return mu2 * mu1; }

RElem conjugate(const RElem& mu);
bool s_membership(const RElem& mu);
bool is_algebraic(const RElem& mu);  // b == v, c == 0
bool is_laurent(const RElem& mu);
// (p, q) with g^mu = g^p conj(g)^q
std::optional<std::pair<Integer, Integer>> laurent_exponents(const RElem& mu);

using RVec = std::vector<RElem>;

// sum_k a^k b^k; throws LengthMismatch
RElem pairing(const RVec& alpha, const RVec& beta);
RVec right_multiply(const RVec& beta, const RElem& mu);
RVec conjugate(const RVec& v);

struct DualBasis {
  std::vector<int> index;   // I, in the order given
  std::vector<RVec> alphas;  // alphas[p] dual to the ray index[p]
  const RVec& alpha(int i) const;
};

// betas[p] is the ray of index[p]; throws SingularB / NonUnimodularV
DualBasis dual_basis(const std::vector<int>& index, const std::vector<RVec>& betas);
// sign(det B * det V); throws SingularB for singular input
int orientation_sign(const std::vector<RVec>& betas);

}  // namespace topfan
