#pragma once

#include <array>
#include <string>
#include <vector>

#include "phl/model.hpp"
#include "phl/perverse.hpp"
#include "phl/report.hpp"

namespace phl {

/// Signed permutation of the coordinates (i, k, d - n).
struct SignedPermutation {
  std::array<int, 3> perm;   // image coordinate c comes from source coordinate perm[c]
  std::array<int, 3> signs;  // ±1 per image coordinate
  std::string name;

  std::array<int, 3> apply(const std::array<int, 3>& x) const;
  int determinant() const;
  bool is_rotation() const { return determinant() == 1; }
  SignedPermutation compose(const SignedPermutation& inner) const;  // this ∘ inner
  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.perm == b.perm && a.signs == b.signs;
  }
};

/// The 48 signed permutations, rotations (determinant +1) first.
struct SymmetryGroupSpec {
  std::vector<SignedPermutation> elements;

  std::vector<SignedPermutation> rotations() const;
  std::vector<SignedPermutation> reflections() const;
  const SignedPermutation& identity() const;
  /// (i, k, e) -> (-i, k, e)
  static SignedPermutation conjugation();
  /// (i, k, e) -> (k, i, e)
  static SignedPermutation pf_swap();
  /// (i, k, e) -> (-i, -k, -e)
  static SignedPermutation poincare();
};

SymmetryGroupSpec octahedral_group();

/// True when h(g x) = h(x) for every x of the support.
bool cube_invariant_under(const PerverseHodgeCube& cube, const SignedPermutation& g);

/// h = 0 whenever |i| > d or |k| > d; records max |i| and max |k| per slice.
CheckResult bounds_check(const PerverseHodgeCube& cube);
/// h^{i,k,d} = h^{k,i,d}.
CheckResult pf_symmetry_check(const PerverseHodgeCube& cube);
/// Rotations, reflections, conjugation and Poincaré symmetry, each reported
/// as its own check.
CheckFragment octahedral_symmetry_check(const PerverseHodgeCube& cube);
/// Support inside |i| + |k| <= min(d, 2n - d) and all six vertices nonzero.
CheckResult octahedron_conjecture_check(const PerverseHodgeCube& cube);

/// nilp([L_β, Λ_σ̄] on H^{2d}) = min(d, 2n - d) for every d, and the
/// antidiagonal sums Σ_{i+k=c} h^{i,k,d} equal the graded dimensions of the
/// commutator's weight filtration on H^{2d}.
CheckFragment commutator_nilpotency_check(const GradedAlgebraModel& model, const PerverseHodgeCube& cube);

}  // namespace phl
