#include "phl/llv.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "phl/errors.hpp"
#include "phl/nilpotent.hpp"

namespace phl {

GradingOperator grading(const GradedAlgebraModel& model, GradingKind kind) {
  const std::size_t N = model.total_dim();
  const int n = static_cast<int>(model.n);
  VectorQ diag(N);
  for (std::size_t i = 0; i < N; ++i) {
    const Bidegree b = model.bidegree_of(i);
    switch (kind) {
      case GradingKind::H0_degree: diag[i] = 2 * static_cast<int>(model.degree_of(i)) - 2 * n; break;
      case GradingKind::Hq_hodge: diag[i] = b.q - n; break;
      case GradingKind::Hpq_difference: diag[i] = b.p - b.q; break;
    }
  }
  return {MatrixQ::diagonal(diag), kind};
}

namespace {

std::string lefschetz_diagnosis(const MatrixQ& raising, const std::vector<long>& weight) {
  std::map<long, std::vector<std::size_t>> spaces;
  for (std::size_t i = 0; i < weight.size(); ++i) spaces[weight[i]].push_back(i);
  long max_w = 0;
  for (auto w : weight) max_w = std::max(max_w, std::abs(w));
  MatrixQ power = MatrixQ::identity(raising.rows());
  for (long k = 0; k <= max_w; ++k) {
    const auto lo = spaces.count(-k) ? spaces[-k] : std::vector<std::size_t>{};
    const auto hi = spaces.count(k) ? spaces[k] : std::vector<std::size_t>{};
    const std::size_t rk = (lo.empty() || hi.empty()) ? 0 : rank(power.select(hi, lo));
    if (lo.size() != hi.size() || rk != lo.size())
      return "L^" + std::to_string(k) + " : E_{" + std::to_string(-k) + "} -> E_{" + std::to_string(k) +
             "} is not an isomorphism (dimensions " + std::to_string(lo.size()) + " -> " +
             std::to_string(hi.size()) + ", rank " + std::to_string(rk) + "); the operator is not Lefschetz for this grading";
    power = power * raising;
  }
  return "the operator admits no sl2 completion for this grading";
}

}  // namespace

MatrixQ sl2_complete(const MatrixQ& raising, const MatrixQ& h) {
  const std::size_t N = raising.rows();
  if (!raising.is_square() || h.rows() != N || h.cols() != N) throw DimensionMismatch("sl2_complete: size mismatch");
  std::vector<long> weight(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) {
        if (!h(i, i).is_integer()) throw std::invalid_argument("sl2_complete: grading has a non-integral eigenvalue");
        weight[i] = h(i, i).to_long();
      } else if (!h(i, j).is_zero()) {
        throw std::invalid_argument("sl2_complete: grading operator is not diagonal");
      }
    }
  if (!(commutator(h, raising) == raising * Rational(2)))
    throw std::invalid_argument("sl2_complete: [H, L] != 2L");

  long max_w = 0;
  for (auto w : weight) max_w = std::max(max_w, std::abs(w));
  std::vector<MatrixQ> powers{MatrixQ::identity(N)};
  for (long k = 0; k <= max_w; ++k) powers.push_back(powers.back() * raising);

  // Columns of `strings`: L^j v for each lowest-weight vector v of weight -m, j = 0..m.
  struct Column {
    std::size_t prev;  // index of L^{j-1} v, unused for j = 0
    long j, m;
  };
  std::vector<VectorQ> strings;
  std::vector<Column> info;
  for (long m = 0; m <= max_w; ++m) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < N; ++i)
      if (weight[i] == -m) idx.push_back(i);
    if (idx.empty()) continue;
    std::vector<std::size_t> all(N);
    for (std::size_t i = 0; i < N; ++i) all[i] = i;
    const Subspace prim = kernel(powers[static_cast<std::size_t>(m + 1)].select(all, idx));
    for (std::size_t p = 0; p < prim.dim(); ++p) {
      VectorQ v(N);
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = prim.basis()(p, t);
      for (long j = 0; j <= m; ++j) {
        info.push_back({strings.size() - 1, j, m});
        strings.push_back(v);
        v = raising.apply(v);
      }
    }
  }
  if (strings.size() != N) throw LefschetzError(lefschetz_diagnosis(raising, weight));
  MatrixQ basis(N, N);
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t r = 0; r < N; ++r) basis(r, c) = strings[c][r];
  MatrixQ basis_inv;
  try {
    basis_inv = inverse(basis);
  } catch (const std::domain_error&) {
    throw LefschetzError(lefschetz_diagnosis(raising, weight));
  }
  // Λ L^j v = j (m - j + 1) L^{j-1} v
  MatrixQ image(N, N);
  for (std::size_t c = 0; c < N; ++c) {
    const auto& col = info[c];
    if (col.j == 0) continue;
    const Rational f = Rational(col.j * (col.m - col.j + 1));
    for (std::size_t r = 0; r < N; ++r)
      if (!basis(r, col.prev).is_zero()) image(r, c) = f * basis(r, col.prev);
  }
  MatrixQ lowering = image * basis_inv;
  if (!(commutator(h, lowering) == lowering * Rational(-2)) || !(commutator(raising, lowering) == h))
    throw LefschetzError("sl2 completion failed verification");
  return lowering;
}

LieSubalgebra::LieSubalgebra(std::size_t matrix_dim, std::vector<MatrixQ> basis)
    : n_(matrix_dim), span_(matrix_dim * matrix_dim) {
  for (auto& b : basis) {
    if (b.rows() != n_ || b.cols() != n_) throw DimensionMismatch("LieSubalgebra: operator size mismatch");
    if (span_.insert(b.data())) basis_.push_back(std::move(b));
  }
}

bool LieSubalgebra::contains(const MatrixQ& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("LieSubalgebra::contains: operator size mismatch");
  return span_.contains(x.data());
}

bool LieSubalgebra::is_closed() const {
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = a + 1; b < basis_.size(); ++b)
      if (!contains(commutator(basis_[a], basis_[b]))) return false;
  return true;
}

LieSubalgebra lie_closure(const std::vector<MatrixQ>& generators) {
  if (generators.empty()) throw std::invalid_argument("lie_closure: no generators");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("lie_closure: generators differ in size");
  LieSubalgebra alg(n, {});
  std::deque<std::size_t> pending;
  auto add = [&](MatrixQ x) {
    if (!alg.span_.insert(x.data())) return;
    alg.basis_.push_back(std::move(x));
    pending.push_back(alg.basis_.size() - 1);
  };
  for (const auto& g : generators) add(g);
  while (!pending.empty()) {
    const std::size_t i = pending.front();
    pending.pop_front();
    for (const auto& g : generators) add(commutator(g, alg.basis_[i]));
  }
  return alg;
}

bool membership(const LieSubalgebra& algebra, const MatrixQ& x) { return algebra.contains(x); }

Sl2Triple lefschetz_triple(const GradedAlgebraModel& model, std::span<const Rational> x) {
  Sl2Triple t;
  t.raising = lefschetz_matrix(model, x);
  t.h = grading(model, GradingKind::H0_degree).matrix;
  t.lowering = sl2_complete(t.raising, t.h);
  return t;
}

MatrixQ lambda_sigma_bar(const GradedAlgebraModel& model) {
  return sl2_complete(lefschetz_matrix(model, model.classes.sigma_bar), grading(model, GradingKind::Hq_hodge).matrix);
}

MatrixQ beta_sigma_commutator(const GradedAlgebraModel& model) {
  return commutator(lefschetz_matrix(model, model.classes.beta), lambda_sigma_bar(model));
}

namespace {

VectorQ axpy(const VectorQ& x, const Rational& t, const VectorQ& y) {
  VectorQ out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * y[i];
  return out;
}

/// x + tω for the smallest t >= 1 keeping the class non-isotropic.
VectorQ shift_off_cone(const GradedAlgebraModel& model, const VectorQ& x) {
  for (int t = 1; t <= 3; ++t) {
    VectorQ y = axpy(x, Rational(t), model.classes.omega);
    if (!model.h2.form(y, y).is_zero()) return y;
  }
  throw ModelError("no non-isotropic shift x + t*omega with t in 1..3");
}

}  // namespace

std::vector<VectorQ> so6_classes(const GradedAlgebraModel& model) {
  const auto& c = model.classes;
  return {axpy(c.sigma, Rational(1), c.sigma_bar), axpy(c.sigma, Rational(-1), c.sigma_bar), c.omega,
          shift_off_cone(model, c.beta)};
}

LieSubalgebra full_h2_closure(const GradedAlgebraModel& model) {
  const std::size_t b = model.b2();
  std::vector<MatrixQ> gens{grading(model, GradingKind::H0_degree).matrix};
  auto add_class = [&](const VectorQ& x) {
    Sl2Triple t = lefschetz_triple(model, x);
    gens.push_back(std::move(t.raising));
    gens.push_back(std::move(t.lowering));
  };
  add_class(model.classes.omega);
  for (std::size_t i = 0; i < b; ++i) {
    VectorQ e(b);
    e[i] = 1;
    add_class(model.h2.form(e, e).is_zero() ? shift_off_cone(model, e) : e);
  }
  return lie_closure(gens);
}

CheckFragment so6_report(const GradedAlgebraModel& model) {
  CheckFragment out;
  const auto& c = model.classes;
  const std::vector<VectorQ> span4{c.sigma, c.sigma_bar, c.beta, c.omega};
  CheckResult pre("so6.restricted_form_nondegenerate");
  MatrixQ g4(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) g4(a, b) = model.h2.form(span4[a], span4[b]);
  pre.data["rank"] = rank(g4);
  pre.expect(rank(g4) == 4, {{"reason", "q restricted to <sigma, sigma_bar, beta, omega> is degenerate"}, {"rank", rank(g4)}});
  const bool precondition = pre.passed;
  out.push_back(std::move(pre));

  CheckResult dim("so6.dimension");
  CheckResult closed("so6.closed");
  CheckResult member("so6.membership");
  CheckResult comm("so6.commutator");
  if (!precondition) {
    for (auto* r : {&dim, &closed, &member, &comm}) r->fail({{"reason", "precondition failed"}});
  } else {
    try {
      const auto start = std::chrono::steady_clock::now();
      std::vector<MatrixQ> gens{grading(model, GradingKind::H0_degree).matrix};
      Json classes = Json::array();
      for (const auto& x : so6_classes(model)) {
        Sl2Triple t = lefschetz_triple(model, x);
        gens.push_back(std::move(t.raising));
        gens.push_back(std::move(t.lowering));
        Json cx = Json::array();
        for (const auto& v : x) cx.push_back(v.str());
        classes.push_back(std::move(cx));
      }
      const LieSubalgebra alg = lie_closure(gens);
      dim.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      dim.data["dimension"] = alg.dim();
      dim.data["classes"] = std::move(classes);
      dim.expect(alg.dim() == 15, {{"dimension", alg.dim()}, {"expected", 15}});
      closed.expect(alg.is_closed(), {{"reason", "basis brackets leave the span"}});

      const MatrixQ l_beta = lefschetz_matrix(model, c.beta);
      const MatrixQ lambda = lambda_sigma_bar(model);
      member.expect(alg.contains(l_beta), {{"element", "L_beta"}});
      member.expect(alg.contains(lambda), {{"element", "Lambda_sigma_bar"}});
      member.expect(alg.contains(grading(model, GradingKind::Hpq_difference).matrix), {{"element", "H_pq"}});
      member.expect(alg.contains(grading(model, GradingKind::H0_degree).matrix), {{"element", "H_degree"}});

      const MatrixQ cmt = commutator(l_beta, lambda);
      comm.expect(alg.contains(cmt), {{"reason", "[L_beta, Lambda_sigma_bar] not in the algebra"}});
      try {
        const NilpotentOperator nil(cmt);
        comm.data["nilpotency_index"] = nil.index();
      } catch (const NotNilpotent&) {
        comm.fail({{"reason", "[L_beta, Lambda_sigma_bar] is not nilpotent"}});
      }
    } catch (const std::exception& e) {
      for (auto* r : {&dim, &closed, &member, &comm})
        if (r->passed) r->fail({{"reason", e.what()}});
    }
  }
  out.push_back(std::move(dim));
  out.push_back(std::move(closed));
  out.push_back(std::move(member));
  out.push_back(std::move(comm));
  return out;
}

}  // namespace phl
