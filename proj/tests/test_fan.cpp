#include "doctest.h"

#include "support.hpp"
#include "topfan/errors.hpp"
#include "topfan/fan.hpp"
#include "topfan/fixtures.hpp"
#include "topfan/linalg.hpp"
#include "topfan/polyhedral.hpp"
#include "topfan/realizability.hpp"

#include <random>

using namespace topfan;

namespace {

QVec q(std::initializer_list<Rational> xs) { return QVec(xs); }

TopologicalFan with_rays(const TopologicalFan& fan, const std::vector<Ray>& rays) {
  return TopologicalFan(fan.dim(), fan.complex(), rays);
}

}  // namespace

TEST_CASE("fan construction errors") {
  SimplicialComplex k(2, {{1, 2}});
  CHECK_THROWS_AS(TopologicalFan(2, k, {Ray::ordinary({1, 0})}), InvalidFan);
  CHECK_THROWS_AS(TopologicalFan(2, k, {Ray::ordinary({1, 0}), Ray::ordinary({0, 2})}), InvalidFan);
  Ray zero_b{{0, 0}, {}, {0, 1}};
  CHECK_THROWS_AS(TopologicalFan(2, k, {Ray::ordinary({1, 0}), zero_b}), InvalidFan);
}

TEST_CASE("the CP2#CP2 example validates") {
  auto fan = fixtures::cp2_sharp_cp2();
  auto rep = validate(fan);
  CHECK(rep.fan_condition.ok);
  CHECK(rep.completeness.ok);
  CHECK(rep.nonsingularity.ok);
  CHECK(rep.involutive);
  // facet {4,1} is stored as {1,4}
  CHECK(rep.nonsingularity.facet_dets == std::vector<Integer>{1, 1, -1, -1});
  CHECK(determinant(std::vector<ZVec>{fan.ray(4).v, fan.ray(1).v}) == 1);
  CHECK(rep.completeness.samples_checked == 32);
}

TEST_CASE("fan condition witnesses") {
  SimplicialComplex k(3, {{1, 2}, {1, 3}});
  TopologicalFan fan(2, k, {Ray::ordinary({1, 0}), Ray::ordinary({0, 1}), Ray::ordinary({1, 1})});
  auto r = check_fan_condition(fan);
  CHECK_FALSE(r.ok);
  REQUIRE(r.overlap);
  // the witness lies in both cones but not on the shared ray
  CHECK(cone_contains(fan, r.overlap->first, r.point, ConeMode::B));
  CHECK(cone_contains(fan, r.overlap->second, r.point, ConeMode::B));
  CHECK_FALSE(in_cone({{1, 0}}, r.point));

  TopologicalFan single(2, SimplicialComplex(2, {{1, 2}}), {Ray::ordinary({1, 0}), Ray::ordinary({1, 1})});
  CHECK(check_fan_condition(single).ok);

  TopologicalFan dup(2, SimplicialComplex(2, {{1, 2}}), {Ray::ordinary({1, 0}), Ray::ordinary({1, 0})});
  auto d = check_fan_condition(dup);
  CHECK_FALSE(d.ok);
  CHECK(d.dependent == Simplex{1, 2});
}

TEST_CASE("completeness witnesses") {
  auto fan = fixtures::cp2_sharp_cp2();
  TopologicalFan missing(2, SimplicialComplex(4, {{1, 2}, {2, 3}, {3, 4}}), fan.rays());
  auto r = check_complete(missing);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.direction.empty());
  CHECK(locate_cone(missing, r.direction).empty());
  // the witness lies inside the removed cone
  CHECK(cone_contains(fan, {1, 4}, r.direction, ConeMode::B));
  CHECK(check_complete(realize_2sphere(fixtures::octahedron().complex, fixtures::octahedron().positions)).ok);
}

TEST_CASE("non-singularity") {
  auto b = fixtures::barnette_sphere();
  auto found = search_labeling({b.complex, b.ordered_facets, LabelingMode::Unimodular, 1, 0});
  REQUIRE(found.status == LabelingStatus::Sat);
  std::vector<Ray> rays;
  for (const auto& v : found.v) rays.push_back(Ray::ordinary(v));
  // b-data is irrelevant for the unimodularity check
  TopologicalFan fan(4, b.complex, rays);
  CHECK(check_nonsingular(fan).ok);

  // the printed labeling puts e1, e3, d2, d3 in the hyperplane x4 = 0
  std::vector<Ray> printed;
  for (const auto& v : fixtures::barnette_printed_labeling()) printed.push_back(Ray::ordinary(v));
  auto p = check_nonsingular(TopologicalFan(4, b.complex, printed));
  CHECK_FALSE(p.ok);
  CHECK(p.facet == Simplex{1, 3, 6, 7});
  CHECK(p.minor_gcd == 0);

  auto base = fixtures::cp2_sharp_cp2();
  auto rs = base.rays();
  rs[2].v = {-2, -1};
  auto bad = check_nonsingular(with_rays(base, rs));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.facet);
  CHECK(bad.minor_gcd == 2);
}

TEST_CASE("involutivity") {
  auto fan = fixtures::cp2_sharp_cp2();
  CHECK(check_involutive(fan));
  auto rs = fan.rays();
  rs[0].c = {0, 1};
  CHECK_FALSE(check_involutive(with_rays(fan, rs)));
  CHECK(check_involutive(TopologicalFan()));
}

TEST_CASE("cone location") {
  auto fan = fixtures::cp2_sharp_cp2();
  CHECK(locate_cone(fan, q({1, 1})) == std::vector<Simplex>{{1, 2}});
  CHECK(locate_cone(fan, q({-1, Rational(-3, 2)}), ConeMode::V) == std::vector<Simplex>{{2, 3}, {3, 4}, {1, 4}});
  CHECK(locate_cone(fan, fan.ray(1).b) == std::vector<Simplex>{{1, 2}, {1, 4}});

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto f = testing::random_valid_fan(rng);
    for (int s = 0; s < 50; ++s) {
      auto x = random_generic_direction(f, ConeMode::B, rng());
      CHECK(locate_cone(f, x).size() == 1);
    }
  }
}

TEST_CASE("facet-pair condition implies the all-pair condition") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto f = testing::random_valid_fan(rng);
    auto faces = f.complex().all_faces();
    for (const auto& a : faces) {
      if (a.empty()) continue;
      for (const auto& b : faces) {
        if (b.empty()) continue;
        // a point of cone(a) in cone(b) lies in cone(a & b): test the barycentres
        QVec x(f.dim(), 0);
        for (Vertex i : a)
          for (int k = 0; k < f.dim(); ++k) x[k] += f.ray(i).b[k];
        std::vector<QVec> gb;
        for (Vertex i : b) gb.push_back(f.ray(i).b);
        if (!in_cone(gb, x)) continue;
        std::vector<QVec> gi;
        for (Vertex i : set_intersection(a, b)) gi.push_back(f.ray(i).b);
        CHECK(in_cone(gi, x));
      }
    }
  }
}

TEST_CASE("equivalences") {
  auto fan = fixtures::cp2_sharp_cp2();
  auto s = equivalent(fan, fan, EquivalenceMode::Strict);
  REQUIRE(s);
  CHECK(s->sigma == std::vector<Vertex>{1, 2, 3, 4});

  std::vector<Ray> d_rays;
  for (Vertex i = 1; i <= 4; ++i) d_rays.push_back(Ray::from_rvec(right_multiply(fan.beta(i), RElem::mu0())));
  auto dfan = with_rays(fan, d_rays);
  CHECK_FALSE(equivalent(fan, dfan, EquivalenceMode::Strict));
  auto d = equivalent(fan, dfan, EquivalenceMode::D);
  REQUIRE(d);
  CHECK(d->sigma == std::vector<Vertex>{1, 2, 3, 4});

  auto h_rays = fan.rays();
  RElem mu{2, 3, 1};
  h_rays[0] = Ray::from_rvec(right_multiply(fan.beta(1), mu));
  auto hfan = with_rays(fan, h_rays);
  CHECK_FALSE(equivalent(fan, hfan, EquivalenceMode::Strict));
  auto h = equivalent(fan, hfan, EquivalenceMode::H);
  REQUIRE(h);
  CHECK(h->sigma == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(h->mu[0] == mu);
  for (Vertex i = 1; i <= 4; ++i) CHECK(right_multiply(fan.beta(i), h->mu[i - 1]) == hfan.beta(h->sigma[i - 1]));

  // relabelled copy
  SimplicialComplex k2(4, {{3, 4}, {4, 1}, {1, 2}, {2, 3}});
  std::vector<Ray> r2{fan.ray(3), fan.ray(4), fan.ray(1), fan.ray(2)};
  TopologicalFan perm(2, k2, r2);
  auto p = equivalent(fan, perm, EquivalenceMode::Strict);
  REQUIRE(p);
  CHECK(p->sigma == std::vector<Vertex>{3, 4, 1, 2});
}

TEST_CASE("equivalence hierarchy on random perturbed pairs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    auto f = testing::random_valid_fan(rng);
    std::vector<Ray> rays;
    int kind = static_cast<int>(rng() % 3);
    for (Vertex i = 1; i <= f.ray_count(); ++i) {
      RElem mu = RElem::one();
      if (kind >= 1 && rng() % 2) mu = RElem::mu0();
      if (kind == 2) mu = RElem{Rational(1 + static_cast<int>(rng() % 3), 2), testing::random_rational(rng), rng() % 2 ? 1 : -1};
      rays.push_back(Ray::from_rvec(right_multiply(f.beta(i), mu)));
    }
    auto g = TopologicalFan(f.dim(), f.complex(), rays);
    bool strict = equivalent(f, g, EquivalenceMode::Strict).has_value();
    bool dd = equivalent(f, g, EquivalenceMode::D).has_value();
    bool hh = equivalent(f, g, EquivalenceMode::H).has_value();
    if (strict) CHECK(dd);
    if (dd) CHECK(hh);
    CHECK(hh);
    if (kind <= 1) CHECK(dd);
  }
}

TEST_CASE("H canonical form") {
  auto fan = fixtures::cp2_sharp_cp2();
  auto c = h_canonical_form(fan);
  CHECK(c.ray(4).b == q({Rational(-1, 2), Rational(-1, 2)}));
  TopologicalFan one(2, SimplicialComplex(2, {{1, 2}}), {Ray{{2, 0}, {3, 0}, {-1, 0}}, Ray::ordinary({0, 1})});
  auto c1 = h_canonical_form(one);
  CHECK(c1.ray(1) == Ray{{1, 0}, {0, 0}, {1, 0}});

  std::mt19937_64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    auto f = testing::random_valid_fan(rng);
    auto h1 = h_canonical_form(f);
    CHECK(h_canonical_form(h1) == h1);
    if (t % 20 == 0) {
      auto e = equivalent(f, h1, EquivalenceMode::H);
      REQUIRE(e);
      for (Vertex i = 1; i <= f.ray_count(); ++i) CHECK(e->sigma[i - 1] == i);
    }
  }
}
