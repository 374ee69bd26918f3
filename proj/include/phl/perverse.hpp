#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "phl/model.hpp"
#include "phl/nilpotent.hpp"
#include "phl/report.hpp"
#include "phl/subspace.hpp"

namespace phl {

/// Increasing filtration on each even degree piece H^{2d}, stored as
/// subspaces of the total space. Index j runs over [first_index(d),
/// first_index(d) + steps(d) - 1]; below that the step is 0, above it the
/// whole piece.
class FiltrationOnGraded {
 public:
  FiltrationOnGraded() = default;
  FiltrationOnGraded(std::size_t total_dim, std::vector<Subspace> pieces);

  void set_chain(unsigned d, int first_index, std::vector<Subspace> chain);

  unsigned degrees() const { return static_cast<unsigned>(chains_.size()); }
  int first_index(unsigned d) const { return first_.at(d); }
  int last_index(unsigned d) const { return first_.at(d) + static_cast<int>(chains_.at(d).size()) - 1; }
  const std::vector<Subspace>& chain(unsigned d) const { return chains_.at(d); }
  /// F_j H^{2d}.
  Subspace step(unsigned d, int j) const;

 private:
  std::size_t total_dim_ = 0;
  std::vector<Subspace> pieces_;
  std::vector<int> first_;
  std::vector<std::vector<Subspace>> chains_;
};

/// Bigraded dimension table h^{i,k,d}; zero entries are not stored.
class PerverseHodgeCube {
 public:
  PerverseHodgeCube() = default;
  explicit PerverseHodgeCube(unsigned n) : n_(n) {}

  unsigned n() const { return n_; }
  std::size_t at(int i, int k, int d) const;
  /// Sets an entry (removes it when h = 0).
  void set(int i, int k, int d, std::size_t h);
  /// Keyed by (d, k, i), which is also the serialization order.
  const std::map<std::tuple<int, int, int>, std::size_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t total() const;

  friend bool operator==(const PerverseHodgeCube&, const PerverseHodgeCube&) = default;

 private:
  unsigned n_ = 0;
  std::map<std::tuple<int, int, int>, std::size_t> entries_;
};

/// Weight filtration of L_σ̄ on the total space, centered at its nilpotency
/// index, cut down to each degree; index k is the weight. Throws ModelError
/// when the nilpotency index is not n.
FiltrationOnGraded hodge_filtration_via_sigma_bar(const GradedAlgebraModel& model);

/// The chain ⊕_{q >= 2n-k} H^{p,q} ∩ H^{2d} read off the stored bigrading,
/// indexed like hodge_filtration_via_sigma_bar.
FiltrationOnGraded hodge_filtration_from_bigrading(const GradedAlgebraModel& model);

/// W^β on the total space; throws ModelError when nilp(L_β) != n.
WeightFiltration beta_weight_filtration(const GradedAlgebraModel& model);

/// P_j H^m = W^β_{j - m + 2n} ∩ H^m (m = 2d).
FiltrationOnGraded perverse_filtration(const GradedAlgebraModel& model);
FiltrationOnGraded perverse_filtration(const GradedAlgebraModel& model, const WeightFiltration& w_beta);

/// h^{i,k,d} = dim (P_{d+k} ∩ H^{d+i,d-i}) - dim (P_{d+k-1} ∩ H^{d+i,d-i}) on H^{2d}.
PerverseHodgeCube cube(const GradedAlgebraModel& model);
PerverseHodgeCube cube(const GradedAlgebraModel& model, const FiltrationOnGraded& perverse);

struct DiamondAndBetti {
  /// (p, q) -> h^{p,q}, all pairs with 0 <= p, q <= 2n present.
  std::map<std::pair<int, int>, std::size_t> hodge;
  std::vector<std::size_t> betti;  // b_0 .. b_{4n}
};

DiamondAndBetti diamond_and_betti(const PerverseHodgeCube& cube);

/// Cross-check: the L_σ̄ weight filtration equals the bigrading chain.
CheckResult hodge_cross_check(const GradedAlgebraModel& model);

/// Every step of the filtration is spanned by pure-bidegree vectors.
CheckResult bigraded_check(const GradedAlgebraModel& model, const FiltrationOnGraded& f, std::string name);

/// Σ_i h^{i,k,d} = dim Gr^P_{d+k} H^{2d} for all (k, d), and totals match.
CheckResult purity_check(const GradedAlgebraModel& model, const FiltrationOnGraded& perverse,
                         const PerverseHodgeCube& cube);

}  // namespace phl
