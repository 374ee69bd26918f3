#include "doctest.h"
#include "phl/errors.hpp"
#include "phl/octahedron.hpp"
#include "phl/perverse.hpp"
#include "phl/suite.hpp"
#include "support.hpp"

using namespace phl;
using phl::testing::load_model;

TEST_CASE("perverse filtration on K3 H^2") {
  const GradedAlgebraModel m = load_model("k3_b22");
  const NilpotentOperator l_beta = lefschetz(m, m.classes.beta);
  CHECK(l_beta.index() == 1);
  const WeightFiltration w = beta_weight_filtration(m);
  CHECK(verify_weight_axioms(l_beta, w).passed);
  const FiltrationOnGraded p = perverse_filtration(m, w);
  // P_j H^2 for j = 0, 1, 2.
  CHECK(p.step(1, 0).dim() == 1);
  CHECK(p.step(1, 1).dim() == 21);
  CHECK(p.step(1, 2).dim() == 22);
  CHECK(p.step(1, -1).dim() == 0);
  CHECK(p.step(1, 5).dim() == 22);
}

TEST_CASE("K3 cube and reconstruction") {
  const PerverseHodgeCube c = cube(load_model("k3_b22"));
  CHECK(c.at(0, 0, 1) == 18);
  for (const auto& [i, k] : std::vector<std::pair<int, int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) CHECK(c.at(i, k, 1) == 1);
  CHECK(c.at(1, 1, 1) == 0);
  CHECK(c.entries().size() == 7);
  const DiamondAndBetti db = diamond_and_betti(c);
  CHECK(db.betti == std::vector<std::size_t>{1, 0, 22, 0, 1});
  CHECK(db.hodge.at({1, 1}) == 20);
  CHECK(db.hodge.at({2, 0}) == 1);
  CHECK(db.hodge.at({1, 0}) == 0);
}

TEST_CASE("reconstruction of an empty cube and a Verbitsky cube") {
  const DiamondAndBetti empty = diamond_and_betti(PerverseHodgeCube(1));
  for (const auto& [pq, h] : empty.hodge) CHECK(h == 0);
  CHECK(empty.betti == std::vector<std::size_t>{0, 0, 0, 0, 0});
  const DiamondAndBetti v = diamond_and_betti(cube(load_model("verbitsky_n2_b5")));
  CHECK(v.betti == std::vector<std::size_t>{1, 0, 5, 0, 15, 0, 5, 0, 1});
}

TEST_CASE("filtration checks on shipped models") {
  for (const auto& name : phl::testing::shipped_specs()) {
    CAPTURE(name);
    const GradedAlgebraModel m = load_model(name);
    CHECK(hodge_cross_check(m).passed);
    const FiltrationOnGraded p = perverse_filtration(m);
    CHECK(bigraded_check(m, p, "p").passed);
    CHECK(bigraded_check(m, hodge_filtration_via_sigma_bar(m), "f").passed);
    const PerverseHodgeCube c = cube(m, p);
    const CheckResult purity = purity_check(m, p, c);
    CHECK(purity.passed);
    CHECK(c.total() == m.total_dim());
  }
}

TEST_CASE("verbitsky n=2 b2=5 middle slice") {
  const PerverseHodgeCube c = cube(load_model("verbitsky_n2_b5"));
  std::size_t slice = 0;
  for (const auto& [key, h] : c.entries())
    if (std::get<0>(key) == 2) slice += h;
  CHECK(slice == 15);
  CHECK(c.at(2, 0, 2) == 1);
  CHECK(c.at(-2, 0, 2) == 1);
  CHECK(c.at(0, 2, 2) == 1);
  CHECK(c.at(0, -2, 2) == 1);
}

TEST_CASE("a non-isotropic beta is rejected") {
  GradedAlgebraModel m = load_model("k3_b22");
  m.classes.beta = m.classes.omega;
  CHECK_THROWS_AS(beta_weight_filtration(m), ModelError);
  const CheckReport r = run_check_suite(m);
  CHECK_FALSE(r.all_passed());
  REQUIRE(r.find("octahedron_support") != nullptr);
  CHECK(r.find("octahedron_support")->witnesses[0]["reason"] == "precondition failed");
}

TEST_CASE("broken bidegree tags break conjugation symmetry") {
  GradedAlgebraModel m = load_model("k3_b22");
  m.pieces[1].bidegree[5] = Bidegree{2, 0};
  const PerverseHodgeCube c = cube(m);
  const CheckFragment sym = octahedral_symmetry_check(c);
  bool conj_failed = false;
  for (const auto& r : sym)
    if (r.name == "conjugation_symmetry") conj_failed = !r.passed;
  CHECK(conj_failed);
}
