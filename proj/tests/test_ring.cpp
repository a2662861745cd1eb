#include "doctest.h"

#include "support.hpp"
#include "topfan/errors.hpp"
#include "topfan/fixtures.hpp"
#include "topfan/linalg.hpp"
#include "topfan/ring.hpp"

#include <random>

using namespace topfan;

namespace {

QMatrix as_matrix(const RElem& x) { return {{x.b, 0}, {x.c, Rational(x.v)}}; }

RElem random_elem(std::mt19937_64& rng) {
  return {testing::random_rational(rng), testing::random_rational(rng),
          std::uniform_int_distribution<int>(-4, 4)(rng)};
}

RVec e(int n, int i, const RElem& x = RElem::one()) {
  RVec out(n, RElem::zero());
  out[i] = x;
  return out;
}

// 2n x 2n determinant of columns (b_i; c_i; v_i) by direct elimination
Rational big_det(const std::vector<RVec>& betas) {
  std::size_t n = betas.size();
  QMatrix m(2 * n, QVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      m[2 * k][2 * i] = betas[i][k].b;
      m[2 * k + 1][2 * i] = betas[i][k].c;
      m[2 * k + 1][2 * i + 1] = Rational(betas[i][k].v);
    }
  return determinant(m);
}

}  // namespace

TEST_CASE("ring product matches the matrix oracle") {
  CHECK(RElem::mu0() * RElem::mu0() == RElem::one());
  CHECK(r_mul({1, 2, 3}, {2, 0, 1}) == RElem{2, 4, 3});
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10000; ++t) {
    auto x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
    CHECK((x * RElem::one()) == x);
    CHECK((RElem::one() * x) == x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
    auto p = x * y;
    CHECK(as_matrix(p) == multiply(as_matrix(x), as_matrix(y)));
    CHECK(conjugate(conjugate(x)) == x);
  }
}

TEST_CASE("algebraic elements are closed under product") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      RElem x{a, 0, a}, y{b, 0, b};
      CHECK(is_algebraic(x * y));
    }
}

TEST_CASE("membership and Laurent predicates") {
  CHECK(s_membership(RElem::mu0()));
  CHECK_FALSE(s_membership({0, 0, 1}));
  CHECK(s_membership({Rational(1, 2), 7, 1}));
  CHECK_FALSE(s_membership({1, 0, 2}));
  CHECK(conjugate(RElem{2, 3, 1}) == RElem{2, -3, -1});
  auto le = laurent_exponents({3, 0, 1});
  REQUIRE(le);
  CHECK(le->first == 2);
  CHECK(le->second == 1);
  CHECK_FALSE(is_laurent({2, 0, 1}));
  CHECK_FALSE(is_laurent({1, 1, 1}));
}

TEST_CASE("pairing") {
  CHECK(pairing(e(3, 1), e(3, 1)) == RElem::one());
  CHECK(pairing(e(3, 1), e(3, 2)) == RElem::zero());
  CHECK_THROWS_AS(pairing(e(2, 0), e(3, 0)), LengthMismatch);
  auto fan = fixtures::cp2_sharp_cp2();
  RVec a1{{1, 0, 1}, {0, 0, 0}};
  CHECK(pairing(a1, fan.beta(1)) == RElem::one());
  RVec a2{{0, 0, -2}, {1, 0, 1}};  // (e2, -2e1 + e2)
  CHECK(pairing(a2, fan.beta(3)) == RElem::zero());
}

TEST_CASE("dual basis on the CP2#CP2 example") {
  auto fan = fixtures::cp2_sharp_cp2();
  auto d34 = dual_basis({3, 4}, fan.betas({3, 4}));
  CHECK(d34.alpha(3) == RVec{{-1, 0, 1}, {1, 0, -1}});
  CHECK(d34.alpha(4) == RVec{{0, 0, -2}, {-1, 0, 1}});
  auto d41 = dual_basis({4, 1}, fan.betas({4, 1}));
  CHECK(d41.alpha(4) == RVec{{0, 0, 0}, {-1, 0, -1}});
  CHECK(d41.alpha(1) == RVec{{1, 0, 1}, {-1, 0, -1}});
  auto id = dual_basis({1, 2}, {e(2, 0), e(2, 1)});
  CHECK(id.alpha(1) == e(2, 0));
  CHECK(id.alpha(2) == e(2, 1));

  CHECK(orientation_sign(fan.betas({1, 2})) == 1);
  CHECK(orientation_sign(fan.betas({3, 4})) == -1);
  CHECK(orientation_sign({e(2, 0), e(2, 1)}) == 1);
}

TEST_CASE("dual basis failures are distinguished") {
  RVec b1{{1, 0, 1}, {0, 0, 0}}, b2{{2, 0, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(dual_basis({1, 2}, {b1, b2}), SingularB);
  RVec c1{{1, 0, 1}, {0, 0, 0}}, c2{{0, 0, 0}, {1, 0, 2}};
  CHECK_THROWS_AS(dual_basis({1, 2}, {c1, c2}), NonUnimodularV);
}

TEST_CASE("dual basis property on random data") {
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 300) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto v = testing::random_unimodular(rng, n);
    std::vector<RVec> betas(n, RVec(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        betas[i][k] = {testing::random_rational(rng), testing::random_rational(rng), v[k][i]};
    QMatrix b(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) b[k][i] = betas[i][k].b;
    if (determinant(b) == 0) continue;
    ++tested;
    std::vector<int> index(n);
    for (int i = 0; i < n; ++i) index[i] = i + 1;
    auto d = dual_basis(index, betas);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(pairing(d.alphas[i], betas[j]) == (i == j ? RElem::one() : RElem::zero()));
    int s = orientation_sign(betas);
    CHECK(s == sign(big_det(betas)));
    CHECK(s == orientation_sign(d.alphas));
  }
}
