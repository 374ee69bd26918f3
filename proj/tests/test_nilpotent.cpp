#include <random>

#include "doctest.h"
#include "phl/errors.hpp"
#include "phl/nilpotent.hpp"
#include "support.hpp"

using namespace phl;
using phl::testing::jordan_matrix;
using phl::testing::random_nilpotent;

TEST_CASE("nilpotency index examples") {
  CHECK(NilpotentOperator(MatrixQ(3, 3)).index() == 0);
  CHECK(NilpotentOperator(jordan_matrix({2})).index() == 1);
  CHECK(NilpotentOperator(jordan_matrix({3, 1})).index() == 2);
  CHECK_THROWS_AS(NilpotentOperator(MatrixQ::identity(2)), NotNilpotent);
  CHECK_THROWS_AS(NilpotentOperator(MatrixQ(2, 3)), DimensionMismatch);
}

TEST_CASE("weight filtration of the zero operator") {
  const WeightFiltration w = weight_filtration(NilpotentOperator(MatrixQ(3, 3)), 0);
  REQUIRE(w.chain.size() == 1);
  CHECK(w.chain[0].is_full());
}

TEST_CASE("weight filtration of J2") {
  const NilpotentOperator n(jordan_matrix({2}));
  const WeightFiltration w = weight_filtration(n, 1);
  CHECK(w.graded_dims == std::vector<std::size_t>{1, 0, 1});
  CHECK(w.chain[0] == Subspace::span(MatrixQ{{1, 0}}));
  CHECK(w.chain[1] == w.chain[0]);
  CHECK(w.chain[2].is_full());
  CHECK(w.chain[0].contains(w.chain[2].mapped(n.matrix())));
  CHECK(verify_weight_axioms(n, w).passed);
  CHECK_THROWS_AS(weight_filtration(n, 2), std::invalid_argument);
}

TEST_CASE("corrupted chain fails axiom (a)") {
  const NilpotentOperator n(jordan_matrix({2}));
  WeightFiltration w = weight_filtration(n);
  w.chain[0] = Subspace::span(MatrixQ{{0, 1}});
  w.chain[1] = w.chain[0];
  const CheckResult r = verify_weight_axioms(n, w);
  CHECK_FALSE(r.passed);
  bool saw_a = false;
  for (const auto& wit : r.witnesses) saw_a |= wit.value("axiom", "") == "a";
  CHECK(saw_a);
}

TEST_CASE("jordan partitions") {
  CHECK(jordan_partition(NilpotentOperator(MatrixQ(3, 3))) == std::vector<std::size_t>{1, 1, 1});
  CHECK(jordan_partition(NilpotentOperator(jordan_matrix({3, 1}))) == std::vector<std::size_t>{3, 1});
  std::mt19937 rng(41);
  CHECK(jordan_partition(NilpotentOperator(random_nilpotent(rng, {4, 2, 2}))) == std::vector<std::size_t>{4, 2, 2});
}

TEST_CASE("random Jordan shapes: axioms, sl2 dims, palindromes, conjugation invariance") {
  std::mt19937 rng(43);
  for (int t = 0; t < 50; ++t) {
    const auto shape = phl::testing::random_partition(rng, 12);
    const NilpotentOperator n(random_nilpotent(rng, shape));
    const WeightFiltration w = weight_filtration(n);
    CHECK(verify_weight_axioms(n, w).passed);
    CHECK(w.graded_dims == sl2_graded_dims(shape));
    const auto& g = w.graded_dims;
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(g[k] == g[g.size() - 1 - k]);
    const NilpotentOperator conj(random_nilpotent(rng, shape));
    CHECK(weight_filtration(conj).graded_dims == g);
  }
}

TEST_CASE("uniqueness: perturbed chains fail the axioms") {
  std::mt19937 rng(47);
  int perturbed = 0;
  for (int t = 0; t < 30; ++t) {
    const auto shape = phl::testing::random_partition(rng, 6);
    const NilpotentOperator n(random_nilpotent(rng, shape));
    const WeightFiltration w = weight_filtration(n);
    const std::size_t dim = n.dim();
    for (std::size_t k = 0; k + 1 < w.chain.size(); ++k) {
      const Subspace lower = k == 0 ? Subspace::zero(dim) : w.chain[k - 1];
      const Subspace& upper = w.chain[k + 1];
      const std::size_t target = w.chain[k].dim();
      if (target == lower.dim() || target == upper.dim()) continue;  // nothing to perturb
      // Any intermediate subspace of the right dimension other than W_k.
      for (int attempt = 0; attempt < 6; ++attempt) {
        SpanBuilder b(dim);
        for (std::size_t i = 0; i < lower.dim(); ++i) b.insert(lower.vector(i));
        std::uniform_int_distribution<int> coef(-2, 2);
        while (b.dim() < target) {
          VectorQ v(dim);
          for (std::size_t i = 0; i < upper.dim(); ++i) {
            const VectorQ u = upper.vector(i);
            const Rational c(coef(rng));
            for (std::size_t j = 0; j < dim; ++j) v[j] += c * u[j];
          }
          b.insert(v);
        }
        const Subspace x = b.to_subspace();
        if (x == w.chain[k]) continue;
        WeightFiltration bad = w;
        bad.chain[k] = x;
        CHECK_FALSE(verify_weight_axioms(n, bad).passed);
        ++perturbed;
      }
    }
  }
  CHECK(perturbed > 20);
}

TEST_CASE("sl2 graded dims formula") {
  CHECK(sl2_graded_dims({1, 1, 1}) == std::vector<std::size_t>{3});
  CHECK(sl2_graded_dims({3, 1}) == std::vector<std::size_t>{1, 0, 2, 0, 1});
  CHECK(sl2_graded_dims({2, 2, 1}) == std::vector<std::size_t>{2, 1, 2});
}
