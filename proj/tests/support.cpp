#include "support.hpp"

#include "topfan/fixtures.hpp"
#include "topfan/realizability.hpp"

namespace topfan::testing {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

TopologicalFan base_fan(std::mt19937_64& rng) {
  switch (uniform(rng, 0, 5)) {
    case 0:
      return fixtures::projective_space_fan(1);
    case 1:
      return fixtures::projective_space_fan(2);
    case 2:
      return fixtures::projective_space_fan(3);
    case 3:
      return product_fan(fixtures::cp1_fan(), fixtures::cp1_fan());
    case 4:
      return product_fan(product_fan(fixtures::cp1_fan(), fixtures::cp1_fan()), fixtures::cp1_fan());
    default:
      return product_fan(fixtures::cp1_fan(), fixtures::projective_space_fan(2));
  }
}

ZVec mat_vec(const std::vector<ZVec>& u, const ZVec& x) {
  ZVec y(u.size(), 0);
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t k = 0; k < x.size(); ++k) y[r] += u[r][k] * x[k];
  return y;
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, int num_range, int den_range) {
  return Rational(uniform(rng, -num_range, num_range), uniform(rng, 1, den_range));
}

std::vector<ZVec> random_unimodular(std::mt19937_64& rng, int n, int steps) {
  std::vector<ZVec> u(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  if (n < 2) {
    if (uniform(rng, 0, 1)) u[0][0] = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    int i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    int f = uniform(rng, -1, 1);
    for (int k = 0; k < n; ++k) u[i][k] += f * u[j][k];
  }
  if (uniform(rng, 0, 1))
    for (auto& x : u[0]) x = -x;
  return u;
}

TopologicalFan random_valid_fan(std::mt19937_64& rng, bool involutive) {
  TopologicalFan fan = base_fan(rng);
  int subdivisions = uniform(rng, 0, 3);
  for (int s = 0; s < subdivisions && fan.dim() > 1 && fan.ray_count() < 8; ++s) {
    const auto& facets = fan.complex().facets();
    fan = stellar_subdivide_fan(fan, facets[uniform(rng, 0, static_cast<int>(facets.size()) - 1)]);
  }
  int n = fan.dim();
  auto ub = random_unimodular(rng, n);
  auto uv = random_unimodular(rng, n);
  std::vector<Ray> rays;
  for (const auto& r : fan.rays()) {
    Ray out;
    ZVec bi(n);
    for (int k = 0; k < n; ++k) bi[k] = static_cast<std::int64_t>(numerator(r.b[k]));  // base rays are integral
    Rational scale(uniform(rng, 1, 4), uniform(rng, 1, 3));
    for (auto x : mat_vec(ub, bi)) out.b.push_back(scale * x);
    out.v = mat_vec(uv, r.v);
    if (uniform(rng, 0, 1))
      for (auto& x : out.v) x = -x;
    out.c.assign(n, 0);
    if (!involutive)
      for (auto& x : out.c) x = uniform(rng, 0, 2) ? random_rational(rng) : Rational(0);
    rays.push_back(std::move(out));
  }
  return TopologicalFan(n, fan.complex(), std::move(rays));
}

}  // namespace topfan::testing
