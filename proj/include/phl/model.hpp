#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phl/matrix.hpp"
#include "phl/nilpotent.hpp"
#include "phl/report.hpp"
#include "phl/subspace.hpp"

namespace phl {

enum class ModelKind { k3, verbitsky };

/// Which model to build. When `gram` is given, basis vector 0 is σ, 1 is σ̄,
/// 2 is β and ω = e2 + e3; otherwise `default_gram(b2)` is used.
struct ModelSpec {
  ModelKind kind = ModelKind::k3;
  unsigned n = 1;
  unsigned b2 = 22;
  std::optional<MatrixQ> gram;
};

struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

enum class ClassLabel { sigma, sigma_bar, hodge11 };

/// H^2 with its Beauville–Bogomolov form and the σ / σ̄ tags.
struct QuadraticSpace {
  MatrixQ gram;
  std::vector<ClassLabel> labels;

  std::size_t dim() const { return gram.rows(); }
  Rational form(std::span<const Rational> x, std::span<const Rational> y) const;
};

/// σ, σ̄, β, ω as coordinate vectors in H^2.
struct DistinguishedClasses {
  VectorQ sigma, sigma_bar, beta, omega;
};

/// One cohomological degree 2d: a block of consecutive basis vectors.
struct GradedPiece {
  std::size_t offset = 0;
  std::size_t dim = 0;
  std::vector<Bidegree> bidegree;
  std::vector<std::string> names;
};

/// Data kept from the symmetric-algebra construction, used by the ideal and
/// cross-construction checks.
struct VerbitskyPresentation {
  unsigned b2 = 0;
  /// Exponent vectors of all monomials of degree d, d = 0..2n.
  std::vector<std::vector<std::vector<unsigned>>> monomials;
  /// Indices (into monomials[d]) of the monomials chosen as basis of piece d.
  std::vector<std::vector<std::size_t>> representatives;
  /// Row m: coordinates of monomial m of degree d in the basis of piece d.
  std::vector<MatrixQ> projection;
};

/// Graded commutative algebra with Poincaré pairing, Hodge bigrading and the
/// distinguished classes. Degree index d stands for H^{2d}; all cohomology is
/// even.
struct GradedAlgebraModel {
  unsigned n = 1;
  QuadraticSpace h2;
  std::vector<GradedPiece> pieces;  // d = 0..2n
  /// mult[{d1, d2}] has dim(d1)*dim(d2) rows (row a*dim(d2)+b) and dim(d1+d2)
  /// columns, for every ordered pair with d1 + d2 <= 2n.
  std::map<std::pair<unsigned, unsigned>, MatrixQ> mult;
  VectorQ integral;  // on the top piece
  DistinguishedClasses classes;
  MatrixQ conj;  // total_dim x total_dim, block diagonal
  std::optional<VerbitskyPresentation> presentation;

  std::size_t total_dim() const;
  std::size_t b2() const { return h2.dim(); }
  const GradedPiece& piece(unsigned d) const { return pieces.at(d); }
  /// Degree index of a total-space basis vector.
  unsigned degree_of(std::size_t index) const;
  Bidegree bidegree_of(std::size_t index) const;

  /// Product of piece vectors; empty result when d1 + d2 > 2n.
  VectorQ multiply(unsigned d1, std::span<const Rational> x, unsigned d2, std::span<const Rational> y) const;
  /// Product of total-space vectors.
  VectorQ multiply(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Embeds a degree-2 vector into the total space.
  VectorQ from_h2(std::span<const Rational> x) const;
  /// Integral of the top-degree component of a total-space vector.
  Rational integrate(std::span<const Rational> x) const;

  /// Indices of the basis vectors of H^{2d} with the given bidegree.
  std::vector<std::size_t> indices_with_bidegree(unsigned d, Bidegree b) const;
  std::vector<std::size_t> indices_of_piece(unsigned d) const;
  std::vector<std::string> basis_names() const;
};

/// σ,σ̄ hyperbolic pair, β,β∨ hyperbolic pair, then diagonal entries
/// (+1 followed by −1s when b2 = 22, all −1 otherwise).
MatrixQ default_gram(unsigned b2);
DistinguishedClasses default_classes(unsigned b2);

/// Throws ModelError on b2 < 5 (with a dedicated message for b2 = 4),
/// out-of-range n, or a degenerate or ill-shaped Gram matrix.
void check_spec(const ModelSpec& spec);

GradedAlgebraModel build_k3(const ModelSpec& spec);
/// Degree 2d piece: Sym^d H^2 for d <= n, Sym^d H^2 / K_d above, where K_d is
/// the kernel of the pairing into Sym^{2n-d} given by the matching-sum integral.
GradedAlgebraModel build_verbitsky(const ModelSpec& spec);
GradedAlgebraModel build_model(const ModelSpec& spec);

/// Σ over perfect matchings of the factors of Π q(x_a, x_b); `factors` lists
/// variable indices with repetition.
Rational matching_integral(const MatrixQ& gram, const std::vector<unsigned>& factors);

/// Cup product with a degree-2 class on the total space.
MatrixQ lefschetz_matrix(const GradedAlgebraModel& model, std::span<const Rational> x);
NilpotentOperator lefschetz(const GradedAlgebraModel& model, std::span<const Rational> x);

/// Structural checks: associativity, commutativity, unit, Poincaré
/// nondegeneracy, bigradedness, conjugation, distinguished classes and,
/// for Verbitsky models, that the pairing kernel is an ideal.
CheckFragment validate(const GradedAlgebraModel& model);

/// Same model with σ, σ̄ scaled by `sigma_scale` and β by `beta_scale`.
GradedAlgebraModel with_rescaled_classes(const GradedAlgebraModel& model, const Rational& beta_scale,
                                         const Rational& sigma_scale);

/// Betti numbers b_0 .. b_{4n} of a model.
std::vector<std::size_t> betti_numbers(const GradedAlgebraModel& model);

}  // namespace phl
