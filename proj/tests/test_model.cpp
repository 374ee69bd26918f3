#include <map>
#include <random>

#include "doctest.h"
#include "phl/errors.hpp"
#include "phl/model.hpp"
#include "phl/perverse.hpp"
#include "support.hpp"

using namespace phl;

namespace {

bool all_pass(const CheckFragment& f) {
  for (const auto& r : f)
    if (!r.passed) return false;
  return true;
}

const CheckResult& named(const CheckFragment& f, const std::string& name) {
  for (const auto& r : f)
    if (r.name == name) return r;
  throw std::logic_error(name);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Hyperbolic pairs scaled by 2 and 3, then -2 on the diagonal: a Gram
/// matrix that is not its own inverse.
MatrixQ skewed_gram(unsigned b2) {
  MatrixQ g(b2, b2);
  g(0, 1) = g(1, 0) = 2;
  g(2, 3) = g(3, 2) = 3;
  for (unsigned i = 4; i < b2; ++i) g(i, i) = -2;
  return g;
}

std::vector<unsigned> factors_of(const std::vector<unsigned>& exps) {
  std::vector<unsigned> f;
  for (unsigned v = 0; v < exps.size(); ++v)
    for (unsigned e = 0; e < exps[v]; ++e) f.push_back(v);
  return f;
}

/// K_d: monomial combinations in Sym^d pairing to zero with Sym^{2n-d}.
Subspace pairing_kernel(const GradedAlgebraModel& m, unsigned d) {
  const auto& p = *m.presentation;
  const auto& rows = p.monomials.at(d);
  const auto& cols = p.monomials.at(2 * m.n - d);
  MatrixQ pairing(cols.size(), rows.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto f = factors_of(rows[r]);
      const auto g = factors_of(cols[c]);
      f.insert(f.end(), g.begin(), g.end());
      pairing(c, r) = matching_integral(m.h2.gram, f);
    }
  return kernel(pairing);
}

/// Σ_ij c_ij ∂_i ∂_j : Sym^d -> Sym^{d-2} in monomial coordinates.
Subspace contraction_kernel(const GradedAlgebraModel& m, unsigned d, const MatrixQ& c) {
  const auto& p = *m.presentation;
  const auto& src = p.monomials.at(d);
  const auto& dst = p.monomials.at(d - 2);
  std::map<std::vector<unsigned>, std::size_t> where;
  for (std::size_t i = 0; i < dst.size(); ++i) where[dst[i]] = i;
  MatrixQ op(dst.size(), src.size());
  const unsigned b2 = static_cast<unsigned>(m.b2());
  for (std::size_t s = 0; s < src.size(); ++s)
    for (unsigned i = 0; i < b2; ++i)
      for (unsigned j = 0; j < b2; ++j) {
        if (c(i, j).is_zero()) continue;
        auto e = src[s];
        if (e[i] == 0) continue;
        long coef = e[i]--;
        if (e[j] == 0) continue;
        coef *= e[j]--;
        op(where.at(e), s) += c(i, j) * Rational(coef);
      }
  return kernel(op);
}

}  // namespace

TEST_CASE("k3 model") {
  const GradedAlgebraModel m = build_k3(ModelSpec{});
  CHECK(m.total_dim() == 24);
  CHECK(betti_numbers(m) == std::vector<std::size_t>{1, 0, 22, 0, 1});
  std::map<Bidegree, std::size_t> h2;
  for (const Bidegree b : m.piece(1).bidegree) ++h2[b];
  CHECK(h2[{2, 0}] == 1);
  CHECK(h2[{1, 1}] == 20);
  CHECK(h2[{0, 2}] == 1);
  CHECK(m.piece(2).bidegree[0] == Bidegree{2, 2});
  CHECK(all_pass(validate(m)));
}

TEST_CASE("verbitsky graded dimensions") {
  const GradedAlgebraModel m = phl::testing::load_model("verbitsky_n2_b5");
  CHECK(betti_numbers(m) == std::vector<std::size_t>{1, 0, 5, 0, 15, 0, 5, 0, 1});
  CHECK(m.total_dim() == 27);
  CHECK(all_pass(validate(m)));
  CHECK(named(validate(m), "model.pairing_kernel_ideal").passed);
  for (const auto& [n, b2] : std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {2, 7}, {3, 5}, {2, 8}}) {
    const GradedAlgebraModel v = build_verbitsky(ModelSpec{ModelKind::verbitsky, n, b2, std::nullopt});
    for (unsigned d = 0; d <= 2 * n; ++d) {
      const unsigned e = d <= n ? d : 2 * n - d;
      CHECK(v.piece(d).dim == binomial(b2 + e - 1, e));
    }
  }
}

TEST_CASE("fujiki relation") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const char* name : {"k3_b22", "verbitsky_n2_b5", "verbitsky_n3_b5"}) {
    const GradedAlgebraModel m = phl::testing::load_model(name);
    long double_factorial = 1;
    for (unsigned k = 1; k < 2 * m.n; k += 2) double_factorial *= k;
    for (int t = 0; t < 20; ++t) {
      VectorQ a(m.b2());
      for (auto& x : a) x = coef(rng);
      const VectorQ total = m.from_h2(a);
      VectorQ power = total;
      for (unsigned k = 1; k < 2 * m.n; ++k) power = m.multiply(power, total);
      Rational expected(double_factorial);
      const Rational q = m.h2.form(a, a);
      for (unsigned k = 0; k < m.n; ++k) expected = expected * q;
      CHECK(m.integrate(power) == expected);
    }
  }
}

TEST_CASE("pairing kernel in degree n+1 is the kernel of the Gram contraction") {
  for (unsigned n : {1u, 2u}) {
    ModelSpec spec{ModelKind::verbitsky, n, 5, skewed_gram(5)};
    const GradedAlgebraModel m = build_verbitsky(spec);
    const Subspace k = pairing_kernel(m, n + 1);
    CHECK(k.dim() == binomial(5 + n, n + 1) - binomial(5 + n - 2, n - 1));
    CHECK(k == contraction_kernel(m, n + 1, m.h2.gram));
    // The inverse Gram gives a different subspace once G != G^{-1}.
    CHECK_FALSE(k == contraction_kernel(m, n + 1, inverse(m.h2.gram)));
  }
}

TEST_CASE("verbitsky n = 1 agrees with the k3 model") {
  const GradedAlgebraModel k3 = build_k3(ModelSpec{});
  const GradedAlgebraModel v = build_verbitsky(ModelSpec{ModelKind::verbitsky, 1, 22, std::nullopt});
  CHECK(betti_numbers(k3) == betti_numbers(v));
  CHECK(k3.piece(1).bidegree == v.piece(1).bidegree);
  for (std::size_t i = 0; i < 22; ++i)
    for (std::size_t j = 0; j < 22; ++j) {
      VectorQ x(22), y(22);
      x[i] = 1;
      y[j] = 1;
      CHECK(k3.integrate(k3.multiply(k3.from_h2(x), k3.from_h2(y))) ==
            v.integrate(v.multiply(v.from_h2(x), v.from_h2(y))));
    }
  CHECK(cube(k3) == cube(v));
}

TEST_CASE("mutated structure constant breaks associativity") {
  GradedAlgebraModel m = phl::testing::load_model("verbitsky_n2_b5");
  MatrixQ& t = m.mult.at({1, 1});
  t(2 * 5 + 3, 0) += 1;  // e2 * e3 picks up an extra component
  t(3 * 5 + 2, 0) += 1;  // keep it commutative
  CHECK_FALSE(named(validate(m), "model.associativity").passed);
  CHECK(named(validate(m), "model.commutativity").passed);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_WITH_AS(check_spec(ModelSpec{ModelKind::k3, 1, 4, std::nullopt}), doctest::Contains("b2 = 4"),
                       ModelError);
  CHECK_THROWS_AS(check_spec(ModelSpec{ModelKind::k3, 2, 22, std::nullopt}), ModelError);
  CHECK_THROWS_AS(check_spec(ModelSpec{ModelKind::verbitsky, 4, 5, std::nullopt}), ModelError);
  CHECK_THROWS_AS(check_spec(ModelSpec{ModelKind::verbitsky, 2, 9, std::nullopt}), ModelError);
  MatrixQ degenerate = default_gram(5);
  degenerate(4, 4) = 0;
  CHECK_THROWS_AS(check_spec(ModelSpec{ModelKind::verbitsky, 2, 5, degenerate}), ModelError);
  MatrixQ asym = default_gram(5);
  asym(0, 4) = 1;
  CHECK_THROWS_AS(check_spec(ModelSpec{ModelKind::verbitsky, 2, 5, asym}), ModelError);
}

TEST_CASE("conjugation and distinguished classes") {
  const GradedAlgebraModel m = phl::testing::load_model("verbitsky_n2_b7");
  CHECK(named(validate(m), "model.conjugation").passed);
  CHECK(named(validate(m), "model.distinguished_classes").passed);
  CHECK(m.h2.form(m.classes.beta, m.classes.beta).is_zero());
  CHECK(m.h2.form(m.classes.sigma, m.classes.sigma).is_zero());
  CHECK_FALSE(m.h2.form(m.classes.sigma, m.classes.sigma_bar).is_zero());
}
