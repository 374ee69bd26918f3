#include "phl/perverse.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "phl/errors.hpp"

namespace phl {

FiltrationOnGraded::FiltrationOnGraded(std::size_t total_dim, std::vector<Subspace> pieces)
    : total_dim_(total_dim), pieces_(std::move(pieces)), first_(pieces_.size(), 0), chains_(pieces_.size()) {}

void FiltrationOnGraded::set_chain(unsigned d, int first_index, std::vector<Subspace> chain) {
  first_.at(d) = first_index;
  chains_.at(d) = std::move(chain);
}

Subspace FiltrationOnGraded::step(unsigned d, int j) const {
  const auto& c = chains_.at(d);
  if (c.empty() || j > last_index(d)) return pieces_.at(d);
  if (j < first_.at(d)) return Subspace::zero(total_dim_);
  return c[static_cast<std::size_t>(j - first_[d])];
}

std::size_t PerverseHodgeCube::at(int i, int k, int d) const {
  auto it = entries_.find({d, k, i});
  return it == entries_.end() ? 0 : it->second;
}

void PerverseHodgeCube::set(int i, int k, int d, std::size_t h) {
  if (h == 0)
    entries_.erase({d, k, i});
  else
    entries_[{d, k, i}] = h;
}

std::size_t PerverseHodgeCube::total() const {
  std::size_t s = 0;
  for (const auto& [key, h] : entries_) s += h;
  return s;
}

namespace {

std::vector<Subspace> piece_subspaces(const GradedAlgebraModel& m) {
  std::vector<Subspace> out;
  for (unsigned d = 0; d < m.pieces.size(); ++d) out.push_back(Subspace::coordinate(m.total_dim(), m.indices_of_piece(d)));
  return out;
}

/// Cuts a total-space weight filtration down to each degree piece; step j on
/// H^{2d} is W_{j + shift(d)}.
FiltrationOnGraded restrict_to_pieces(const GradedAlgebraModel& m, const WeightFiltration& w,
                                      const std::function<int(unsigned)>& first_index) {
  const auto pieces = piece_subspaces(m);
  FiltrationOnGraded f(m.total_dim(), pieces);
  for (unsigned d = 0; d < m.pieces.size(); ++d) {
    std::vector<Subspace> chain;
    for (const auto& wk : w.chain) chain.push_back(meet(wk, pieces[d]));
    f.set_chain(d, first_index(d), std::move(chain));
  }
  return f;
}

std::set<Bidegree> bidegrees_in(const GradedAlgebraModel& m, unsigned d) {
  return {m.pieces[d].bidegree.begin(), m.pieces[d].bidegree.end()};
}

}  // namespace

FiltrationOnGraded hodge_filtration_via_sigma_bar(const GradedAlgebraModel& model) {
  const NilpotentOperator l_sigma_bar = lefschetz(model, model.classes.sigma_bar);
  if (l_sigma_bar.index() != model.n)
    throw ModelError("nilpotency index of L_sigma_bar is " + std::to_string(l_sigma_bar.index()) + ", expected n = " +
                     std::to_string(model.n) + "; the model is inconsistent");
  const WeightFiltration w = weight_filtration(l_sigma_bar);
  return restrict_to_pieces(model, w, [](unsigned) { return 0; });
}

FiltrationOnGraded hodge_filtration_from_bigrading(const GradedAlgebraModel& model) {
  const int two_n = static_cast<int>(2 * model.n);
  FiltrationOnGraded f(model.total_dim(), piece_subspaces(model));
  for (unsigned d = 0; d < model.pieces.size(); ++d) {
    std::vector<Subspace> chain;
    for (int k = 0; k <= two_n; ++k) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < model.pieces[d].dim; ++i)
        if (model.pieces[d].bidegree[i].q >= two_n - k) idx.push_back(model.pieces[d].offset + i);
      chain.push_back(Subspace::coordinate(model.total_dim(), idx));
    }
    f.set_chain(d, 0, std::move(chain));
  }
  return f;
}

WeightFiltration beta_weight_filtration(const GradedAlgebraModel& model) {
  const NilpotentOperator l_beta = lefschetz(model, model.classes.beta);
  if (l_beta.index() != model.n)
    throw ModelError("nilpotency index of L_beta is " + std::to_string(l_beta.index()) + ", expected n = " +
                     std::to_string(model.n) + "; beta does not behave as an isotropic class");
  return weight_filtration(l_beta);
}

FiltrationOnGraded perverse_filtration(const GradedAlgebraModel& model, const WeightFiltration& w_beta) {
  const int two_n = static_cast<int>(2 * model.n);
  // P_j H^{2d} = W_{j - 2d + 2n}, so W_0 sits at j = 2d - 2n.
  return restrict_to_pieces(model, w_beta, [two_n](unsigned d) { return 2 * static_cast<int>(d) - two_n; });
}

FiltrationOnGraded perverse_filtration(const GradedAlgebraModel& model) {
  return perverse_filtration(model, beta_weight_filtration(model));
}

PerverseHodgeCube cube(const GradedAlgebraModel& model, const FiltrationOnGraded& perverse) {
  PerverseHodgeCube c(model.n);
  const std::size_t N = model.total_dim();
  for (unsigned d = 0; d < model.pieces.size(); ++d) {
    const int di = static_cast<int>(d);
    for (const Bidegree b : bidegrees_in(model, d)) {
      const Subspace hpq = Subspace::coordinate(N, model.indices_with_bidegree(d, b));
      const int i = b.p - di;
      std::size_t prev = 0;
      for (int j = perverse.first_index(d); j <= perverse.last_index(d); ++j) {
        const std::size_t cur = meet(perverse.step(d, j), hpq).dim();
        if (cur < prev) throw ModelError("perverse filtration is not increasing");
        c.set(i, j - di, di, cur - prev);
        prev = cur;
      }
    }
  }
  return c;
}

PerverseHodgeCube cube(const GradedAlgebraModel& model) { return cube(model, perverse_filtration(model)); }

DiamondAndBetti diamond_and_betti(const PerverseHodgeCube& cube) {
  DiamondAndBetti out;
  const int two_n = static_cast<int>(2 * cube.n());
  for (int p = 0; p <= two_n; ++p)
    for (int q = 0; q <= two_n; ++q) out.hodge[{p, q}] = 0;
  out.betti.assign(static_cast<std::size_t>(2 * two_n + 1), 0);
  for (const auto& [key, h] : cube.entries()) {
    const auto [d, k, i] = key;
    out.hodge[{d + i, d - i}] += h;
    out.betti.at(static_cast<std::size_t>(2 * d)) += h;
  }
  return out;
}

CheckResult hodge_cross_check(const GradedAlgebraModel& model) {
  CheckResult r("hodge_filtration_cross_check");
  FiltrationOnGraded computed;
  try {
    computed = hodge_filtration_via_sigma_bar(model);
  } catch (const ModelError& e) {
    r.fail({{"reason", e.what()}});
    return r;
  }
  const FiltrationOnGraded expected = hodge_filtration_from_bigrading(model);
  Json dims = Json::array();
  for (unsigned d = 0; d < computed.degrees(); ++d) {
    Json row = Json::array();
    for (int k = computed.first_index(d); k <= computed.last_index(d); ++k) {
      const Subspace a = computed.step(d, k);
      row.push_back(a.dim());
      r.expect(a == expected.step(d, k),
               {{"degree", 2 * d}, {"k", k}, {"computed_dim", a.dim()}, {"expected_dim", expected.step(d, k).dim()}});
    }
    dims.push_back(std::move(row));
  }
  r.data["step_dims_by_degree"] = std::move(dims);
  return r;
}

CheckResult bigraded_check(const GradedAlgebraModel& model, const FiltrationOnGraded& f, std::string name) {
  CheckResult r(std::move(name));
  const std::size_t N = model.total_dim();
  for (unsigned d = 0; d < f.degrees(); ++d) {
    const auto types = bidegrees_in(model, d);
    for (int j = f.first_index(d); j <= f.last_index(d); ++j) {
      const Subspace s = f.step(d, j);
      bool ok = true;
      for (std::size_t v = 0; v < s.dim() && ok; ++v) {
        const VectorQ vec = s.vector(v);
        for (const Bidegree b : types) {
          VectorQ part(N);
          for (auto idx : model.indices_with_bidegree(d, b)) part[idx] = vec[idx];
          if (!s.contains(part)) {
            ok = false;
            break;
          }
        }
      }
      r.expect(ok, {{"degree", 2 * d}, {"index", j}});
    }
  }
  return r;
}

CheckResult purity_check(const GradedAlgebraModel& model, const FiltrationOnGraded& perverse,
                         const PerverseHodgeCube& c) {
  CheckResult r("perverse_purity");
  for (unsigned d = 0; d < perverse.degrees(); ++d) {
    const int di = static_cast<int>(d);
    for (int j = perverse.first_index(d); j <= perverse.last_index(d); ++j) {
      const std::size_t gr = perverse.step(d, j).dim() - perverse.step(d, j - 1).dim();
      std::size_t sum = 0;
      for (const auto& [key, h] : c.entries())
        if (std::get<0>(key) == di && std::get<1>(key) == j - di) sum += h;
      r.expect(sum == gr, {{"d", di}, {"k", j - di}, {"row_sum", sum}, {"graded_dim", gr}});
    }
  }
  r.data["total"] = c.total();
  r.data["model_dim"] = model.total_dim();
  r.expect(c.total() == model.total_dim(), {{"reason", "cube total differs from model dimension"}});
  return r;
}

}  // namespace phl
