#include "phl/nilpotent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "phl/errors.hpp"

namespace phl {

NilpotentOperator::NilpotentOperator(MatrixQ m) {
  if (!m.is_square()) throw DimensionMismatch("NilpotentOperator: matrix is not square");
  const std::size_t n = m.rows();
  // N is nilpotent iff N^n = 0; repeated squaring reaches an exponent >= n cheaply.
  {
    MatrixQ p = m;
    std::size_t e = 1;
    while (e < n && !p.is_zero()) {
      p = p * p;
      e *= 2;
    }
    if (!p.is_zero())
      throw NotNilpotent("operator of size " + std::to_string(n) + " is not nilpotent (N^" +
                         std::to_string(e) + " != 0)");
  }
  powers_.push_back(MatrixQ::identity(n));
  powers_.push_back(std::move(m));
  while (!powers_.back().is_zero()) powers_.push_back(powers_.back() * powers_[1]);
}

MatrixQ NilpotentOperator::power(unsigned k) const {
  if (k < powers_.size()) return powers_[k];
  return MatrixQ(dim(), dim());
}

unsigned nilpotency_index(const NilpotentOperator& n) { return n.index(); }

Subspace WeightFiltration::at(int k) const {
  if (k < 0) return Subspace::zero(ambient_dim());
  if (static_cast<std::size_t>(k) >= chain.size()) return Subspace::full(ambient_dim());
  return chain[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> graded_dimensions(const std::vector<Subspace>& chain) {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (const auto& w : chain) {
    out.push_back(w.dim() >= prev ? w.dim() - prev : 0);
    prev = w.dim();
  }
  return out;
}

WeightFiltration weight_filtration(const NilpotentOperator& n, unsigned l) {
  if (l != n.index())
    throw std::invalid_argument("weight_filtration: center " + std::to_string(l) +
                                " differs from the nilpotency index " + std::to_string(n.index()));
  const std::size_t dim = n.dim();
  std::vector<Subspace> kernels;  // ker N^{i+1}, i = 0..l
  std::vector<Subspace> images;   // Im N^j, j = 0..l
  for (unsigned i = 0; i <= l; ++i) kernels.push_back(kernel(n.power(i + 1)));
  for (unsigned j = 0; j <= l; ++j) images.push_back(image(n.power(j)));

  WeightFiltration w;
  w.center = l;
  const int il = static_cast<int>(l);
  for (int k = 0; k <= 2 * il; ++k) {
    Subspace wk = Subspace::zero(dim);
    // i ranges over [0, l]; the image exponent -j = l + i - k must lie in [0, l].
    for (int i = std::max(0, k - il); i <= il; ++i) {
      const int img = il + i - k;
      if (img < 0 || img > il) continue;
      wk = join(wk, meet(kernels[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(img)]));
    }
    w.chain.push_back(std::move(wk));
  }
  w.graded_dims = graded_dimensions(w.chain);
  return w;
}

WeightFiltration weight_filtration(const NilpotentOperator& n) { return weight_filtration(n, n.index()); }

CheckResult verify_weight_axioms(const NilpotentOperator& n, const WeightFiltration& w, std::string name) {
  CheckResult r(std::move(name));
  const std::size_t dim = n.dim();
  const int l = static_cast<int>(w.center);
  r.data["center"] = w.center;
  r.data["graded_dims"] = w.graded_dims;
  if (w.chain.size() != static_cast<std::size_t>(2 * l + 1)) {
    r.fail({{"axiom", "length"}, {"expected", 2 * l + 1}, {"got", w.chain.size()}});
    return r;
  }
  for (const auto& s : w.chain)
    if (s.ambient_dim() != dim) {
      r.fail({{"axiom", "ambient"}, {"expected", dim}, {"got", s.ambient_dim()}});
      return r;
    }
  for (int k = 1; k <= 2 * l; ++k)
    r.expect(w.at(k).contains(w.at(k - 1)), {{"axiom", "increasing"}, {"k", k}});
  r.expect(w.at(2 * l).is_full(), {{"axiom", "exhaustive"}, {"k", 2 * l}});

  // (a) N W_k ⊆ W_{k-2}
  for (int k = 0; k <= 2 * l; ++k)
    r.expect(w.at(k - 2).contains(w.at(k).mapped(n.matrix())), {{"axiom", "a"}, {"k", k}});

  // (b) N^k : Gr_{l+k} -> Gr_{l-k} is onto, and the graded pieces have equal dimension.
  const auto gr = graded_dimensions(w.chain);
  for (int k = 0; k <= l; ++k) {
    const std::size_t top = gr[static_cast<std::size_t>(l + k)];
    const std::size_t bottom = gr[static_cast<std::size_t>(l - k)];
    const Subspace below = w.at(l - k - 1);
    const Subspace hit = join(w.at(l + k).mapped(n.power(static_cast<unsigned>(k))), below);
    const std::size_t rank_induced = hit.dim() - below.dim();
    const bool ok = top == bottom && rank_induced == bottom && w.at(l - k).contains(hit);
    r.expect(ok, {{"axiom", "b"}, {"k", k}, {"dim_top", top}, {"dim_bottom", bottom}, {"rank", rank_induced}});
  }
  return r;
}

std::vector<std::size_t> jordan_partition(const NilpotentOperator& n) {
  const unsigned l = n.index();
  std::vector<std::size_t> ranks;  // rank N^s, s = 0..l+1
  for (unsigned s = 0; s <= l + 1; ++s) ranks.push_back(rank(n.power(s)));
  // at_least[s] = #blocks of size >= s
  std::vector<std::size_t> parts;
  for (unsigned s = l + 1; s >= 1; --s) {
    const std::size_t at_least = ranks[s - 1] - ranks[s];
    const std::size_t at_least_next = s + 1 <= l + 1 ? ranks[s] - ranks[s + 1] : 0;
    for (std::size_t c = 0; c < at_least - at_least_next; ++c) parts.push_back(s);
  }
  return parts;
}

std::vector<std::size_t> sl2_graded_dims(const std::vector<std::size_t>& partition) {
  if (partition.empty()) return {};
  const std::size_t l = *std::max_element(partition.begin(), partition.end()) - 1;
  std::vector<std::size_t> dims(2 * l + 1, 0);
  for (std::size_t k = 0; k <= l; ++k) {
    std::size_t c = 0;
    for (auto p : partition)
      if (p >= k + 1 && (p - (k + 1)) % 2 == 0) ++c;
    dims[l + k] = c;
    dims[l - k] = c;
  }
  return dims;
}

}  // namespace phl
