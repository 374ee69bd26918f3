#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "phl/matrix.hpp"

namespace phl {

/// A subspace of Q^n stored by its reduced row echelon basis.
///
/// The RREF basis is unique for a given subspace, so two Subspace values are
/// equal exactly when they describe the same subspace.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  /// Row space of `rows`.
  static Subspace span(const MatrixQ& rows);
  static Subspace span(const std::vector<VectorQ>& vectors, std::size_t ambient_dim);
  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(std::size_t n, std::span<const std::size_t> indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Rows form the canonical (RREF) basis.
  const MatrixQ& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  VectorQ vector(std::size_t i) const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Image of this subspace under the linear map m (acting on column vectors).
  Subspace mapped(const MatrixQ& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  MatrixQ basis_;
  std::vector<std::size_t> pivots_;
};

struct Reduction {
  Subspace basis;
  std::size_t rank;
};

/// Canonical basis of the row space of m.
Reduction reduce(const MatrixQ& m);

/// {v : m v = 0}.
Subspace kernel(const MatrixQ& m);

/// Column space of m.
Subspace image(const MatrixQ& m);

/// Orthogonal complement for the standard dot product.
Subspace annihilator(const Subspace& s);

Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);

/// {v : m v in s}.
Subspace preimage(const MatrixQ& m, const Subspace& s);

/// Incrementally grown span with sparse semi-echelon rows.
///
/// Used where many candidate vectors are tested against a growing span
/// (bracket closure, greedy basis selection); `to_subspace` gives the
/// canonical form.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds v if it is not already in the span; returns true when the span grew.
  bool insert(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;

  Subspace to_subspace() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<std::pair<std::uint32_t, Rational>> entries;  // pivot entry normalized to 1
  };
  void reduce_in_place(VectorQ& v) const;

  std::size_t ambient_;
  std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace phl
