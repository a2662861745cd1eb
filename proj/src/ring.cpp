#include "topfan/ring.hpp"

#include "topfan/errors.hpp"
#include "topfan/linalg.hpp"

#include <string>

namespace topfan {

RElem operator+(const RElem& x, const RElem& y) { return {x.b + y.b, x.c + y.c, x.v + y.v}; }
RElem operator-(const RElem& x, const RElem& y) { return {x.b - y.b, x.c - y.c, x.v - y.v}; }
RElem operator-(const RElem& x) { return {-x.b, -x.c, -x.v}; }

RElem operator*(const RElem& x, const RElem& y) {
  // [[xb,0],[xc,xv]] [[yb,0],[yc,yv]]
  return {x.b * y.b, x.c * y.b + x.v * y.c, x.v * y.v};
}

RElem conjugate(const RElem& mu) { return {mu.b, -mu.c, -mu.v}; }

bool s_membership(const RElem& mu) { return mu.b > 0 && (mu.v == 1 || mu.v == -1); }

bool is_algebraic(const RElem& mu) { return mu.c == 0 && mu.b == mu.v; }

bool is_laurent(const RElem& mu) {
  if (mu.c != 0 || !is_integer(mu.b)) return false;
  Integer diff = numerator(mu.b) - mu.v;
  return diff % 2 == 0;
}

std::optional<std::pair<Integer, Integer>> laurent_exponents(const RElem& mu) {
  if (!is_laurent(mu)) return std::nullopt;
  Integer b = numerator(mu.b);
  return std::make_pair(Integer((b + mu.v) / 2), Integer((b - mu.v) / 2));
}

RElem pairing(const RVec& alpha, const RVec& beta) {
  if (alpha.size() != beta.size())
    throw LengthMismatch("pairing of lengths " + std::to_string(alpha.size()) + " and " + std::to_string(beta.size()));
  RElem s = RElem::zero();
  for (std::size_t k = 0; k < alpha.size(); ++k) s = s + alpha[k] * beta[k];
  return s;
}

RVec right_multiply(const RVec& beta, const RElem& mu) {
  RVec out;
  out.reserve(beta.size());
  for (const auto& x : beta) out.push_back(x * mu);
  return out;
}

RVec conjugate(const RVec& v) {
  RVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(conjugate(x));
  return out;
}

const RVec& DualBasis::alpha(int i) const {
  for (std::size_t p = 0; p < index.size(); ++p)
    if (index[p] == i) return alphas[p];
  throw BadParameters("index " + std::to_string(i) + " not in dual basis");
}

namespace {

// columns are the rays
void blocks(const std::vector<RVec>& betas, QMatrix& b, QMatrix& c, QMatrix& v) {
  const std::size_t n = betas.size();
  b.assign(n, QVec(n));
  c.assign(n, QVec(n));
  v.assign(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (betas[i].size() != n) throw LengthMismatch("ray length differs from facet size");
    for (std::size_t k = 0; k < n; ++k) {
      b[k][i] = betas[i][k].b;
      c[k][i] = betas[i][k].c;
      v[k][i] = betas[i][k].v;
    }
  }
}

}  // namespace

DualBasis dual_basis(const std::vector<int>& index, const std::vector<RVec>& betas) {
  if (index.size() != betas.size()) throw LengthMismatch("index and rays differ in length");
  QMatrix b, c, v;
  blocks(betas, b, c, v);
  auto binv = inverse(b);
  if (!binv) throw SingularB("b-vectors are linearly dependent");
  Rational dv = determinant(v);
  if (dv != 1 && dv != -1) throw NonUnimodularV("det of v-vectors is " + to_string(dv));
  auto vinv = *inverse(v);
  QMatrix gamma = multiply(multiply(vinv, c), *binv);
  const std::size_t n = betas.size();
  DualBasis out;
  out.index = index;
  for (std::size_t i = 0; i < n; ++i) {
    RVec alpha(n);
    for (std::size_t k = 0; k < n; ++k) {
      alpha[k].b = (*binv)[i][k];
      alpha[k].c = -gamma[i][k];
      alpha[k].v = static_cast<std::int64_t>(numerator(vinv[i][k]));
    }
    out.alphas.push_back(std::move(alpha));
  }
  return out;
}

int orientation_sign(const std::vector<RVec>& betas) {
  QMatrix b, c, v;
  blocks(betas, b, c, v);
  int s = sign(determinant(b)) * sign(determinant(v));
  if (s == 0) throw SingularB("singular ray set");
  return s;
}

}  // namespace topfan
