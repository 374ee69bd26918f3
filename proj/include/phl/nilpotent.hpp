#pragma once

#include <cstddef>
#include <vector>

#include "phl/matrix.hpp"
#include "phl/report.hpp"
#include "phl/subspace.hpp"

namespace phl {

/// Square matrix some power of which vanishes; checked on construction.
///
/// Powers N^0 .. N^{index+1} are computed once and kept, since every
/// filtration computation needs them.
class NilpotentOperator {
 public:
  /// Throws DimensionMismatch for non-square input and NotNilpotent when no
  /// power up to the dimension vanishes.
  explicit NilpotentOperator(MatrixQ m);

  const MatrixQ& matrix() const { return powers_[1]; }
  std::size_t dim() const { return powers_[1].rows(); }
  /// l with N^l != 0 and N^{l+1} = 0.
  unsigned index() const { return static_cast<unsigned>(powers_.size()) - 2; }
  /// N^k; zero for k > index.
  MatrixQ power(unsigned k) const;

 private:
  std::vector<MatrixQ> powers_;  // N^0 .. N^{index+1}
};

unsigned nilpotency_index(const NilpotentOperator& n);

/// Increasing filtration W_0 ⊆ ... ⊆ W_{2l} of a nilpotent operator,
/// centered at l.
struct WeightFiltration {
  unsigned center = 0;
  std::vector<Subspace> chain;          // W_0 .. W_{2l}
  std::vector<std::size_t> graded_dims;  // dim Gr_0 .. dim Gr_{2l}

  std::size_t ambient_dim() const { return chain.empty() ? 0 : chain.back().ambient_dim(); }
  /// W_k with W_k = 0 below 0 and W_k = V above 2l.
  Subspace at(int k) const;
};

/// Deligne weight filtration centered at the nilpotency index:
///   W_k = sum over i >= 0, j <= 0, i + j = k - l of ker N^{i+1} ∩ Im N^{-j}.
/// Throws std::invalid_argument if l differs from the nilpotency index.
WeightFiltration weight_filtration(const NilpotentOperator& n, unsigned l);
WeightFiltration weight_filtration(const NilpotentOperator& n);

/// Recomputes graded dimensions of an arbitrary chain.
std::vector<std::size_t> graded_dimensions(const std::vector<Subspace>& chain);

/// Checks that `w` is a weight filtration of `n`: the chain is increasing and
/// exhausts V, N W_k ⊆ W_{k-2}, and N^k : Gr_{l+k} -> Gr_{l-k} is an
/// isomorphism for every k >= 0.
CheckResult verify_weight_axioms(const NilpotentOperator& n, const WeightFiltration& w,
                                 std::string name = "weight_axioms");

/// Jordan block sizes, largest first, recovered from ranks of powers.
std::vector<std::size_t> jordan_partition(const NilpotentOperator& n);

/// Graded dimensions predicted by sl2 theory for a Jordan partition with
/// largest part l + 1: dim Gr_{l±k} = #{parts p >= k+1 with p ≡ k+1 mod 2}.
std::vector<std::size_t> sl2_graded_dims(const std::vector<std::size_t>& partition);

}  // namespace phl
