#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "phl/rational.hpp"

namespace phl {

using VectorQ = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(std::size_t n);
  static MatrixQ diagonal(std::span<const Rational> d);
  /// Builds a matrix whose rows are the given vectors (all of length `cols`).
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  VectorQ column(std::size_t c) const;
  /// Row-major flattening, used when matrices are treated as vectors.
  const std::vector<Rational>& data() const { return a_; }

  bool is_zero() const;
  MatrixQ transpose() const;
  /// Submatrix on the given row and column index lists.
  MatrixQ select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  MatrixQ power(unsigned k) const;
  VectorQ apply(std::span<const Rational> v) const;

  MatrixQ& operator+=(const MatrixQ& o);
  MatrixQ& operator-=(const MatrixQ& o);
  MatrixQ& operator*=(const Rational& s);

  friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
  friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
  friend MatrixQ operator*(MatrixQ a, const Rational& s) { return a *= s; }
  friend MatrixQ operator*(const Rational& s, MatrixQ a) { return a *= s; }
  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// [a, b] = ab - ba.
MatrixQ commutator(const MatrixQ& a, const MatrixQ& b);

/// Brings `m` to reduced row echelon form in place (zero rows sink to the
/// bottom) and returns the pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(MatrixQ& m);

/// Rank by exact elimination.
std::size_t rank(const MatrixQ& m);

/// Inverse of a square matrix; throws DimensionMismatch if not square and
/// std::domain_error if singular.
MatrixQ inverse(const MatrixQ& m);

bool is_zero(std::span<const Rational> v);

}  // namespace phl
