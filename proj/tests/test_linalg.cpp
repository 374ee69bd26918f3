#include <random>

#include "doctest.h"
#include "phl/errors.hpp"
#include "phl/matrix.hpp"
#include "phl/subspace.hpp"
#include "support.hpp"

using namespace phl;

namespace {

/// Bareiss fraction-free elimination on integer entries; independent of the
/// rational RREF used by the library.
std::size_t bareiss_rank(std::vector<std::vector<long long>> a) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  long long prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

MatrixQ random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> e(lo, hi);
  MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = e(rng);
  return m;
}

Subspace random_subspace(std::mt19937& rng, std::size_t dim, std::size_t ambient) {
  return Subspace::span(random_matrix(rng, dim, ambient));
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rank examples") {
  CHECK(rank(MatrixQ::identity(2)) == 2);
  const MatrixQ prop{{1, 2}, {2, 4}};
  CHECK(rank(prop) == 1);
  const Subspace s = Subspace::span(prop);
  CHECK(s.basis() == MatrixQ{{1, 2}});
  CHECK(Subspace::span(MatrixQ::identity(2)).basis() == MatrixQ::identity(2));
}

TEST_CASE("rank agrees with fraction-free elimination") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    // Low-rank products make the comparison non-trivial.
    const MatrixQ m = random_matrix(rng, 4, 2 + t % 3) * random_matrix(rng, 2 + t % 3, 4);
    std::vector<std::vector<long long>> a(4, std::vector<long long>(4));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) a[r][c] = m(r, c).to_long();
    CHECK(rank(m) == bareiss_rank(a));
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel(MatrixQ(3, 3)).is_full());
  CHECK(kernel(MatrixQ::identity(3)).is_zero());
  const MatrixQ j3{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(kernel(j3) == Subspace::span(MatrixQ{{1, 0, 0}}));
}

TEST_CASE("kernel and image satisfy their defining equations") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const MatrixQ m = random_matrix(rng, 3, 5) * random_matrix(rng, 5, 6);
    const Subspace k = kernel(m);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m.apply(k.vector(i))));
    CHECK(k.dim() + image(m).dim() == m.cols());
  }
}

TEST_CASE("inverse") {
  std::mt19937 rng(3);
  const MatrixQ p = phl::testing::random_unimodular(rng, 5);
  CHECK(p * inverse(p) == MatrixQ::identity(5));
  CHECK_THROWS_AS(inverse(MatrixQ{{1, 2}, {2, 4}}), std::domain_error);
}

TEST_CASE("meet and join of lines") {
  const Subspace a = Subspace::span(MatrixQ{{1, 0}});
  const Subspace b = Subspace::span(MatrixQ{{1, 1}});
  CHECK(meet(a, b).is_zero());
  CHECK(join(a, b).is_full());
}

TEST_CASE("lattice laws on random triples") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> dim(0, 5);
  for (int t = 0; t < 30; ++t) {
    const Subspace a = random_subspace(rng, dim(rng), 5);
    const Subspace b = random_subspace(rng, dim(rng), 5);
    const Subspace c = random_subspace(rng, dim(rng), 5);
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(meet(a, join(a, b)) == a);
    CHECK(join(a, meet(a, b)) == a);
    CHECK(join(a, b).dim() + meet(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("three-dimensional subspaces of 5-space meet in the expected dimension") {
  std::mt19937 rng(23);
  for (int t = 0; t < 10; ++t) {
    const Subspace a = random_subspace(rng, 3, 5);
    const Subspace b = random_subspace(rng, 3, 5);
    CHECK(meet(a, b).dim() == a.dim() + b.dim() - join(a, b).dim());
  }
}

TEST_CASE("canonical form is independent of the spanning set") {
  std::mt19937 rng(29);
  for (int t = 0; t < 10; ++t) {
    const MatrixQ m = random_matrix(rng, 3, 6);
    const MatrixQ mixed = phl::testing::random_unimodular(rng, 3) * m;
    CHECK(Subspace::span(m) == Subspace::span(mixed));
    CHECK(Subspace::span(m).basis() == Subspace::span(mixed).basis());
  }
}

TEST_CASE("preimage") {
  std::mt19937 rng(31);
  const MatrixQ m = random_matrix(rng, 4, 2) * random_matrix(rng, 2, 5);
  CHECK(preimage(m, Subspace::full(4)).is_full());
  CHECK(preimage(m, Subspace::zero(4)) == kernel(m));
  for (int t = 0; t < 10; ++t) {
    const Subspace s = random_subspace(rng, 2, 4);
    const Subspace p = preimage(m, s);
    for (std::size_t i = 0; i < p.dim(); ++i) CHECK(s.contains(m.apply(p.vector(i))));
    // Sampled vectors outside the preimage must map outside s.
    for (int k = 0; k < 10; ++k) {
      const MatrixQ v = random_matrix(rng, 1, 5);
      const VectorQ row(v.row(0).begin(), v.row(0).end());
      CHECK(p.contains(row) == s.contains(m.apply(row)));
    }
  }
}

TEST_CASE("span builder matches rank") {
  std::mt19937 rng(37);
  const MatrixQ m = random_matrix(rng, 6, 3) * random_matrix(rng, 3, 8);
  SpanBuilder b(8);
  std::size_t inserted = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) inserted += b.insert(m.row(r));
  CHECK(inserted == rank(m));
  CHECK(b.to_subspace() == Subspace::span(m));
  CHECK(b.contains(m.row(0)));
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(meet(Subspace::zero(2), Subspace::zero(3)), DimensionMismatch);
}
