#pragma once

#include <cstddef>
#include <vector>

#include "phl/matrix.hpp"
#include "phl/model.hpp"
#include "phl/report.hpp"
#include "phl/subspace.hpp"

namespace phl {

enum class GradingKind {
  H0_degree,       // (m - 2n) on H^m
  Hq_hodge,        // (q - n) on H^{p,q}
  Hpq_difference,  // (p - q) on H^{p,q}
};

struct GradingOperator {
  MatrixQ matrix;  // diagonal in the model basis
  GradingKind kind;
};

GradingOperator grading(const GradedAlgebraModel& model, GradingKind kind);

/// The unique Λ with [H, Λ] = -2Λ and [L, Λ] = H.
///
/// Requires [H, L] = 2L with H diagonal and integral. Λ is assembled on a
/// basis of L-strings through the lowest-weight vectors of each H-eigenspace.
/// Throws LefschetzError naming the first k for which L^k : E_{-k} -> E_k is
/// not an isomorphism, and std::invalid_argument if [H, L] != 2L.
MatrixQ sl2_complete(const MatrixQ& raising, const MatrixQ& h);

/// Span of a set of operators closed under the commutator bracket.
class LieSubalgebra {
 public:
  LieSubalgebra() = default;
  LieSubalgebra(std::size_t matrix_dim, std::vector<MatrixQ> basis);

  std::size_t matrix_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<MatrixQ>& basis() const { return basis_; }
  bool contains(const MatrixQ& x) const;
  /// Brackets of all basis pairs stay in the span (quadratic in dim).
  bool is_closed() const;

 private:
  friend LieSubalgebra lie_closure(const std::vector<MatrixQ>& generators);
  std::size_t n_ = 0;
  std::vector<MatrixQ> basis_;
  SpanBuilder span_{0};
};

/// Lie algebra generated by `generators`: new elements are bracketed with
/// the generators until no new direction appears.
LieSubalgebra lie_closure(const std::vector<MatrixQ>& generators);

/// Throws DimensionMismatch on size mismatch.
bool membership(const LieSubalgebra& algebra, const MatrixQ& x);

struct Sl2Triple {
  MatrixQ raising, lowering, h;
};

/// (L_x, Λ_x, H0_degree) for a degree-2 class x.
Sl2Triple lefschetz_triple(const GradedAlgebraModel& model, std::span<const Rational> x);

/// Λ_σ̄: sl2 partner of L_σ̄ for the Hodge grading H_q.
MatrixQ lambda_sigma_bar(const GradedAlgebraModel& model);

/// [L_β, Λ_σ̄].
MatrixQ beta_sigma_commutator(const GradedAlgebraModel& model);

/// The four Lefschetz classes σ+σ̄, σ−σ̄, ω, β+tω (smallest t >= 1 with
/// q(β+tω) != 0).
std::vector<VectorQ> so6_classes(const GradedAlgebraModel& model);

/// Closure of Lefschetz triples of a non-isotropic spanning set of H^2.
LieSubalgebra full_h2_closure(const GradedAlgebraModel& model);

/// Closure of the four Lefschetz triples; dimension 15 with L_β, Λ_σ̄, the
/// gradings and [L_β, Λ_σ̄] inside it.
CheckFragment so6_report(const GradedAlgebraModel& model);

}  // namespace phl
