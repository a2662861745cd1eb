#include "doctest.h"

#include "support.hpp"
#include "topfan/errors.hpp"
#include "topfan/fixtures.hpp"
#include "topfan/realizability.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace topfan;

namespace {

SimplicialComplex square() { return SimplicialComplex(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

// six-vertex projective plane
SimplicialComplex rp2() {
  return SimplicialComplex(6, {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 5, 6},
                               {3, 4, 6}, {4, 5, 6}});
}

}  // namespace

TEST_CASE("sign tables") {
  auto b = fixtures::barnette_sphere();
  auto st = derive_sign_table(8, b.ordered_facets);
  REQUIRE(st.table);
  CHECK(st.table->signs == fixtures::barnette_table_signs());
  CHECK(st.table->signs[1] == -1);
  CHECK(st.table->signs[5] == 1);
  CHECK(st.table->signs[17] == -1);
  CHECK(st.table->signs[18] == 1);

  auto sq = derive_sign_table(4, {{1, 2}, {3, 2}, {3, 4}, {1, 4}});
  REQUIRE(sq.table);
  CHECK(sq.table->signs == std::vector<int>{1, -1, 1, -1});

  auto tri = derive_sign_table(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(tri.table.has_value());

  auto p = rp2();
  CHECK(is_pseudomanifold(p));
  auto rp = derive_sign_table(6, p.facets());
  CHECK_FALSE(rp.table.has_value());
  CHECK(rp.contradiction_cycle.size() >= 3);
  CHECK(rp.contradiction_cycle.front() == rp.contradiction_cycle.back());

  CHECK_THROWS_AS(derive_sign_table(4, {{1, 2}, {3, 4}}), InvalidComplex);
}

TEST_CASE("unimodular search on small spheres") {
  LabelingProblem sq{square(), {}, LabelingMode::ToricSign, 1};
  auto out = search_labeling(sq);
  REQUIRE(out.status == LabelingStatus::Sat);
  CHECK(verify_labeling(sq.complex.facets(), out.v, LabelingMode::ToricSign, out.signs));
  CHECK(out.v[0] == ZVec{1, 0});
  CHECK(out.v[1] == ZVec{0, 1});
  // the product pattern is also a certificate
  std::vector<ZVec> cert{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CHECK(verify_labeling(sq.complex.facets(), cert, LabelingMode::ToricSign, out.signs));
  CHECK_FALSE(verify_labeling(sq.complex.facets(), {{1, 0}, {0, 1}, {2, 1}, {0, -1}}, LabelingMode::Unimodular));

  LabelingProblem oct{fixtures::octahedron().complex, {}, LabelingMode::Unimodular, 1};
  auto o = search_labeling(oct);
  REQUIRE(o.status == LabelingStatus::Sat);
  CHECK(verify_labeling(oct.complex.facets(), o.v, LabelingMode::Unimodular));

  LabelingProblem rp{rp2(), {}, LabelingMode::ToricSign, 2};
  auto r = search_labeling(rp);
  CHECK(r.status == LabelingStatus::Infeasible);
  CHECK(r.certificate == "sign-contradiction");
}

TEST_CASE("Barnette labeling searches") {
  auto b = fixtures::barnette_sphere();
  // printed labeling: det 0 on No.9-11, |det| 2 on No.18-19
  CHECK_FALSE(verify_labeling(b.ordered_facets, fixtures::barnette_printed_labeling(), LabelingMode::Unimodular));
  CHECK_FALSE(verify_labeling(b.ordered_facets, fixtures::barnette_printed_labeling(), LabelingMode::ToricSign,
                              fixtures::barnette_table_signs()));

  LabelingProblem uni{b.complex, b.ordered_facets, LabelingMode::Unimodular, 1, 0};
  auto u = search_labeling(uni);
  REQUIRE(u.status == LabelingStatus::Sat);
  CHECK(verify_labeling(b.ordered_facets, u.v, LabelingMode::Unimodular));

  LabelingProblem tor{b.complex, b.ordered_facets, LabelingMode::ToricSign, 2, 0};
  tor.signs = fixtures::barnette_table_signs();
  auto base = search_labeling(tor);
  CHECK(base.status == LabelingStatus::Unsat);

  // UNSAT does not depend on the vertex order
  SearchOptions rev;
  rev.vertex_order = {8, 7, 6, 5};
  CHECK(search_labeling(tor, rev).status == LabelingStatus::Unsat);
  SearchOptions mixed;
  mixed.vertex_order = {6, 8, 5, 7};
  CHECK(search_labeling(tor, mixed).status == LabelingStatus::Unsat);
}

TEST_CASE("Barnette equation system") {
  BarnetteMatrix d{};
  for (int i = 0; i < 4; ++i) d[i][i] = -1;
  d[0][1] = 1;
  d[1][0] = 1;
  auto rep = verify_barnette_system(d);
  bool pair_fails = false;
  for (const auto& e : rep.equations)
    if (e.name.rfind("pair", 0) == 0 && !e.holds) pair_fails = true;
  CHECK(pair_fails);
  CHECK_FALSE(rep.all_hold());

  CHECK(count_barnette_solutions(2) == 0);

  CHECK(barnette_symbolic_determinant(1) == IntPoly::constant(1));
  CHECK(barnette_symbolic_determinant(6) == IntPoly::constant(1) - IntPoly::d(1, 2) * IntPoly::d(2, 1));
  auto d18 = IntPoly::constant(-1) + IntPoly::d(1, 3) * IntPoly::d(3, 2) * IntPoly::d(2, 1) +
             IntPoly::d(1, 2) * IntPoly::d(2, 3) * IntPoly::d(3, 1) + IntPoly::d(1, 3) * IntPoly::d(3, 1) +
             IntPoly::d(2, 3) * IntPoly::d(3, 2) + IntPoly::d(1, 2) * IntPoly::d(2, 1);
  CHECK(barnette_symbolic_determinant(18) == d18);

  auto cert = barnette_infeasibility_certificate();
  CHECK(cert.cases.size() == 5);
  CHECK(cert.complete());
  for (const auto& c : cert.cases) CHECK_FALSE(c.steps.empty());
}

TEST_CASE("mod-2 obstruction") {
  auto c16 = mod2_obstruction(cyclic_polytope_boundary(4, 16), 4);
  CHECK(c16.status == Mod2Result::Status::Infeasible);
  CHECK(c16.pigeonhole);
  CHECK(c16.clique.size() == 16);

  auto c15 = mod2_obstruction(cyclic_polytope_boundary(4, 15), 4, 200000);
  CHECK_FALSE(c15.pigeonhole);

  auto oct = mod2_obstruction(fixtures::octahedron().complex, 3);
  CHECK(oct.status == Mod2Result::Status::Feasible);
  CHECK(oct.classes.size() == 6);

  auto tet = mod2_obstruction(simplex_boundary(3), 3);
  CHECK(tet.status == Mod2Result::Status::Feasible);
}

TEST_CASE("mod-2 infeasibility implies unimodular UNSAT") {
  // C^3(8) has 8 = 2^3 pairwise adjacent vertices? no: use the neighbourly C^4(16) with n = 4 at small bounds
  auto c = cyclic_polytope_boundary(4, 16);
  for (int k = 1; k <= 2; ++k) {
    LabelingProblem p{c, {}, LabelingMode::Unimodular, k};
    SearchOptions opt;
    opt.use_certificates = false;
    opt.node_limit = 2000000;
    auto out = search_labeling(p, opt);
    CHECK(out.status != LabelingStatus::Sat);
  }
}

TEST_CASE("four-colour realization of 2-spheres") {
  auto check = [](const fixtures::Embedded& e) {
    auto fan = realize_2sphere(e.complex, e.positions);
    CHECK(validate(fan).complete_nonsingular());
    std::vector<ZVec> palette{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    std::set<ZVec> used;
    for (const auto& r : fan.rays()) {
      CHECK(std::find(palette.begin(), palette.end(), r.v) != palette.end());
      used.insert(r.v);
    }
    return used.size();
  };
  check(fixtures::octahedron());
  CHECK(fixtures::icosahedron().complex.facets().size() == 20);
  check(fixtures::icosahedron());
  CHECK(check(fixtures::tetrahedron()) == 4);

  auto oct = fixtures::octahedron();
  auto shifted = oct.positions;
  for (auto& p : shifted) p[0] += 5;  // origin outside
  CHECK_THROWS_AS(realize_2sphere(oct.complex, shifted), NotStarShaped);
}

TEST_CASE("surgeries preserve validity") {
  auto fan = fixtures::cp2_sharp_cp2();
  auto st = stellar_subdivide_fan(fan, {1, 2});
  CHECK(st.ray_count() == 5);
  CHECK(st.ray(5) == Ray::ordinary({1, 1}));
  CHECK(validate(st).complete_nonsingular());
  CHECK_THROWS_AS(stellar_subdivide_fan(fan, {1, 3}), NotAFacet);

  auto su = suspend_fan(fan);
  CHECK(su.dim() == 3);
  CHECK(su.ray_count() == 6);
  CHECK(validate(su).complete_nonsingular());

  auto pr = product_fan(fixtures::cp1_fan(), fixtures::cp1_fan());
  CHECK(pr.ray_count() == 4);
  CHECK(validate(pr).complete_nonsingular());
  std::set<ZVec> vs;
  for (const auto& r : pr.rays()) vs.insert(r.v);
  CHECK(vs == std::set<ZVec>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});

  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    auto f = testing::random_valid_fan(rng);
    REQUIRE(validate(f).complete_nonsingular());
    const auto& facets = f.complex().facets();
    if (f.dim() > 1) CHECK(validate(stellar_subdivide_fan(f, facets[rng() % facets.size()])).complete_nonsingular());
    CHECK(validate(suspend_fan(f)).complete_nonsingular());
  }
}

TEST_CASE("parallel search gives the deterministic verdicts") {
  auto b = fixtures::barnette_sphere();
  SearchOptions par;
  par.deterministic = false;
  par.threads = 3;
  LabelingProblem uni{b.complex, b.ordered_facets, LabelingMode::Unimodular, 1, 0};
  auto u = search_labeling(uni, par);
  REQUIRE(u.status == LabelingStatus::Sat);
  CHECK(verify_labeling(b.ordered_facets, u.v, LabelingMode::Unimodular));
  LabelingProblem tor{b.complex, b.ordered_facets, LabelingMode::ToricSign, 3, 0};
  CHECK(search_labeling(tor, par).status == LabelingStatus::Unsat);
  LabelingProblem oct{fixtures::octahedron().complex, {}, LabelingMode::ToricSign, 1};
  auto o = search_labeling(oct, par);
  REQUIRE(o.status == LabelingStatus::Sat);
  CHECK(verify_labeling(oct.complex.facets(), o.v, LabelingMode::ToricSign, o.signs));
}
