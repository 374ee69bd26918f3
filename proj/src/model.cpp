#include "phl/model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "phl/errors.hpp"

namespace phl {

namespace {

using Exponents = std::vector<unsigned>;

Bidegree label_bidegree(ClassLabel l) {
  switch (l) {
    case ClassLabel::sigma: return {2, 0};
    case ClassLabel::sigma_bar: return {0, 2};
    case ClassLabel::hodge11: return {1, 1};
  }
  return {1, 1};
}

std::vector<ClassLabel> standard_labels(unsigned b2) {
  std::vector<ClassLabel> labels(b2, ClassLabel::hodge11);
  labels[0] = ClassLabel::sigma;
  labels[1] = ClassLabel::sigma_bar;
  return labels;
}

std::string variable_name(std::size_t i) {
  switch (i) {
    case 0: return "sigma";
    case 1: return "sigma_bar";
    case 2: return "beta";
    default: return "e" + std::to_string(i);
  }
}

VectorQ unit_vector(std::size_t n, std::size_t i) {
  VectorQ v(n);
  v[i] = 1;
  return v;
}

QuadraticSpace make_quadratic_space(const ModelSpec& spec) {
  QuadraticSpace h2;
  h2.gram = spec.gram ? *spec.gram : default_gram(spec.b2);
  h2.labels = standard_labels(spec.b2);
  return h2;
}

/// All exponent vectors of total degree d in `vars` variables, x0^d first.
std::vector<Exponents> enumerate_monomials(unsigned vars, unsigned d) {
  std::vector<Exponents> out;
  Exponents cur(vars, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned var, unsigned left) {
    if (var + 1 == vars) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[var] = e;
      rec(var + 1, left - e);
    }
    cur[var] = 0;
  };
  if (vars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(0, d);
  return out;
}

std::vector<unsigned> factors_of(const Exponents& e) {
  std::vector<unsigned> f;
  for (unsigned v = 0; v < e.size(); ++v)
    for (unsigned k = 0; k < e[v]; ++k) f.push_back(v);
  return f;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

std::string monomial_name(const Exponents& e) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(v);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

Bidegree monomial_bidegree(const Exponents& e, const std::vector<ClassLabel>& labels) {
  Bidegree b{0, 0};
  for (std::size_t v = 0; v < e.size(); ++v) {
    const Bidegree lb = label_bidegree(labels[v]);
    b.p += static_cast<int>(e[v]) * lb.p;
    b.q += static_cast<int>(e[v]) * lb.q;
  }
  return b;
}

void finalize_offsets(GradedAlgebraModel& m) {
  std::size_t off = 0;
  for (auto& p : m.pieces) {
    p.offset = off;
    off += p.dim;
  }
}

}  // namespace

Rational QuadraticSpace::form(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("QuadraticSpace::form: length mismatch");
  Rational s;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim(); ++b)
      if (!y[b].is_zero() && !gram(a, b).is_zero()) s += x[a] * gram(a, b) * y[b];
  }
  return s;
}

std::size_t GradedAlgebraModel::total_dim() const {
  return pieces.empty() ? 0 : pieces.back().offset + pieces.back().dim;
}

unsigned GradedAlgebraModel::degree_of(std::size_t index) const {
  for (unsigned d = 0; d < pieces.size(); ++d)
    if (index < pieces[d].offset + pieces[d].dim) return d;
  throw DimensionMismatch("degree_of: index out of range");
}

Bidegree GradedAlgebraModel::bidegree_of(std::size_t index) const {
  const unsigned d = degree_of(index);
  return pieces[d].bidegree[index - pieces[d].offset];
}

VectorQ GradedAlgebraModel::multiply(unsigned d1, std::span<const Rational> x, unsigned d2,
                                     std::span<const Rational> y) const {
  if (d1 + d2 > 2 * n) return {};
  const std::size_t n1 = pieces.at(d1).dim, n2 = pieces.at(d2).dim;
  if (x.size() != n1 || y.size() != n2) throw DimensionMismatch("multiply: piece vector length mismatch");
  const MatrixQ& t = mult.at({d1, d2});
  VectorQ out(pieces[d1 + d2].dim);
  Rational c;
  for (std::size_t a = 0; a < n1; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < n2; ++b) {
      if (y[b].is_zero()) continue;
      c = x[a] * y[b];
      auto row = t.row(a * n2 + b);
      for (std::size_t k = 0; k < out.size(); ++k)
        if (!row[k].is_zero()) out[k] += c * row[k];
    }
  }
  return out;
}

VectorQ GradedAlgebraModel::multiply(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t N = total_dim();
  if (x.size() != N || y.size() != N) throw DimensionMismatch("multiply: total vector length mismatch");
  VectorQ out(N);
  for (unsigned d1 = 0; d1 < pieces.size(); ++d1) {
    auto xs = x.subspan(pieces[d1].offset, pieces[d1].dim);
    if (is_zero(xs)) continue;
    for (unsigned d2 = 0; d1 + d2 < pieces.size(); ++d2) {
      auto ys = y.subspan(pieces[d2].offset, pieces[d2].dim);
      if (is_zero(ys)) continue;
      const VectorQ prod = multiply(d1, xs, d2, ys);
      const std::size_t off = pieces[d1 + d2].offset;
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (!prod[k].is_zero()) out[off + k] += prod[k];
    }
  }
  return out;
}

VectorQ GradedAlgebraModel::from_h2(std::span<const Rational> x) const {
  if (x.size() != pieces.at(1).dim) throw DimensionMismatch("from_h2: expected a degree-2 vector");
  VectorQ v(total_dim());
  std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(pieces[1].offset));
  return v;
}

Rational GradedAlgebraModel::integrate(std::span<const Rational> x) const {
  const GradedPiece& top = pieces.back();
  Rational s;
  for (std::size_t i = 0; i < top.dim; ++i) s += integral[i] * x[top.offset + i];
  return s;
}

std::vector<std::size_t> GradedAlgebraModel::indices_with_bidegree(unsigned d, Bidegree b) const {
  std::vector<std::size_t> out;
  const GradedPiece& p = pieces.at(d);
  for (std::size_t i = 0; i < p.dim; ++i)
    if (p.bidegree[i] == b) out.push_back(p.offset + i);
  return out;
}

std::vector<std::size_t> GradedAlgebraModel::indices_of_piece(unsigned d) const {
  std::vector<std::size_t> out(pieces.at(d).dim);
  std::iota(out.begin(), out.end(), pieces[d].offset);
  return out;
}

std::vector<std::string> GradedAlgebraModel::basis_names() const {
  std::vector<std::string> out;
  for (const auto& p : pieces) out.insert(out.end(), p.names.begin(), p.names.end());
  return out;
}

MatrixQ default_gram(unsigned b2) {
  if (b2 < 4) throw ModelError("default_gram: need b2 >= 4");
  MatrixQ g(b2, b2);
  g(0, 1) = g(1, 0) = 1;
  g(2, 3) = g(3, 2) = 1;
  for (unsigned i = 4; i < b2; ++i) g(i, i) = -1;
  if (b2 == 22) g(4, 4) = 1;  // signature (3, 19)
  return g;
}

DistinguishedClasses default_classes(unsigned b2) {
  DistinguishedClasses c;
  c.sigma = unit_vector(b2, 0);
  c.sigma_bar = unit_vector(b2, 1);
  c.beta = unit_vector(b2, 2);
  c.omega = unit_vector(b2, 2);
  c.omega[3] = 1;
  return c;
}

void check_spec(const ModelSpec& spec) {
  if (spec.b2 == 4)
    throw ModelError(
        "b2 = 4 is not supported: this is the exceptional case in which SO(H^2, q) does not act "
        "transitively on isotropic classes, so the P=F exchange argument does not apply; use b2 >= 5");
  if (spec.b2 < 5) throw ModelError("b2 = " + std::to_string(spec.b2) + " is too small; need b2 >= 5");
  if (spec.kind == ModelKind::k3) {
    if (spec.n != 1) throw ModelError("k3 models have n = 1 (got n = " + std::to_string(spec.n) + ")");
    if (spec.b2 > 64) throw ModelError("k3 model: b2 = " + std::to_string(spec.b2) + " exceeds 64");
  } else {
    if (spec.n < 1 || spec.n > 3)
      throw ModelError("verbitsky model: n = " + std::to_string(spec.n) + " outside the supported range 1..3");
    if (spec.b2 > 8 && !(spec.n == 1 && spec.b2 <= 64))
      throw ModelError("verbitsky model: b2 = " + std::to_string(spec.b2) + " exceeds the desk-scale cap of 8");
  }
  if (spec.gram) {
    const MatrixQ& g = *spec.gram;
    if (g.rows() != spec.b2 || g.cols() != spec.b2)
      throw ModelError("gram must be " + std::to_string(spec.b2) + "x" + std::to_string(spec.b2));
    if (!(g == g.transpose())) throw ModelError("gram is not symmetric");
    if (rank(g) != spec.b2) throw ModelError("gram is degenerate");
    if (!g(0, 0).is_zero() || !g(1, 1).is_zero() || g(0, 1).is_zero())
      throw ModelError("gram: basis vectors 0 (sigma) and 1 (sigma_bar) must be isotropic with q(sigma, sigma_bar) != 0");
  }
}

Rational matching_integral(const MatrixQ& gram, const std::vector<unsigned>& factors) {
  if (factors.size() % 2 != 0) return Rational(0);
  if (factors.empty()) return Rational(1);
  std::vector<unsigned> rest;
  rest.reserve(factors.size() - 2);
  Rational total;
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const Rational& g = gram(factors[0], factors[j]);
    if (g.is_zero()) continue;
    rest.clear();
    for (std::size_t k = 1; k < factors.size(); ++k)
      if (k != j) rest.push_back(factors[k]);
    const Rational sub = matching_integral(gram, rest);
    if (!sub.is_zero()) total += g * sub;
  }
  return total;
}

GradedAlgebraModel build_k3(const ModelSpec& spec) {
  if (spec.kind != ModelKind::k3) throw ModelError("build_k3: spec kind is not k3");
  check_spec(spec);
  GradedAlgebraModel m;
  m.n = 1;
  m.h2 = make_quadratic_space(spec);
  const std::size_t b = spec.b2;

  GradedPiece p0{0, 1, {{0, 0}}, {"1"}};
  GradedPiece p1;
  p1.dim = b;
  for (std::size_t i = 0; i < b; ++i) {
    p1.bidegree.push_back(label_bidegree(m.h2.labels[i]));
    p1.names.push_back(variable_name(i));
  }
  GradedPiece p2{0, 1, {{2, 2}}, {"pt"}};
  m.pieces = {p0, p1, p2};
  finalize_offsets(m);

  auto unit_table = [](std::size_t dim) {
    MatrixQ t(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) t(i, i) = 1;
    return t;
  };
  for (unsigned d = 0; d <= 2; ++d) {
    m.mult[{0, d}] = unit_table(m.pieces[d].dim);
    m.mult[{d, 0}] = unit_table(m.pieces[d].dim);
  }
  MatrixQ t11(b * b, 1);
  for (std::size_t a = 0; a < b; ++a)
    for (std::size_t c = 0; c < b; ++c) t11(a * b + c, 0) = m.h2.gram(a, c);
  m.mult[{1, 1}] = std::move(t11);
  m.integral = {Rational(1)};
  m.classes = default_classes(spec.b2);

  m.conj = MatrixQ::identity(m.total_dim());
  const std::size_t s = m.pieces[1].offset;
  m.conj(s, s) = 0;
  m.conj(s + 1, s + 1) = 0;
  m.conj(s, s + 1) = 1;
  m.conj(s + 1, s) = 1;
  return m;
}

GradedAlgebraModel build_verbitsky(const ModelSpec& spec) {
  if (spec.kind != ModelKind::verbitsky) throw ModelError("build_verbitsky: spec kind is not verbitsky");
  check_spec(spec);
  const unsigned n = spec.n;
  const unsigned b = spec.b2;
  GradedAlgebraModel m;
  m.n = n;
  m.h2 = make_quadratic_space(spec);
  const MatrixQ& G = m.h2.gram;

  VerbitskyPresentation pres;
  pres.b2 = b;
  std::vector<std::map<Exponents, std::size_t>> index(2 * n + 1);
  for (unsigned d = 0; d <= 2 * n; ++d) {
    pres.monomials.push_back(enumerate_monomials(b, d));
    for (std::size_t i = 0; i < pres.monomials[d].size(); ++i) index[d][pres.monomials[d][i]] = i;
  }
  std::vector<Rational> top_integral;
  for (const auto& e : pres.monomials[2 * n]) top_integral.push_back(matching_integral(G, factors_of(e)));

  auto pairing = [&](unsigned d) {
    const auto& rows = pres.monomials[d];
    const auto& cols = pres.monomials[2 * n - d];
    MatrixQ p(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) p(i, j) = top_integral[index[2 * n][add(rows[i], cols[j])]];
    return p;
  };

  for (unsigned d = 0; d <= 2 * n; ++d) {
    const auto& mons = pres.monomials[d];
    const MatrixQ p = pairing(d);
    if (d <= n) {
      if (rank(p) != mons.size())
        throw ModelError("verbitsky: Sym^" + std::to_string(d) +
                         " does not inject into cohomology (pairing kernel is nonzero below the middle degree)");
      std::vector<std::size_t> reps(mons.size());
      std::iota(reps.begin(), reps.end(), 0);
      pres.representatives.push_back(std::move(reps));
      pres.projection.push_back(MatrixQ::identity(mons.size()));
      continue;
    }
    SpanBuilder span(p.cols());
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (span.insert(p.row(i))) reps.push_back(i);
    const MatrixQ r = p.select(reps, [&] {
      std::vector<std::size_t> all(p.cols());
      std::iota(all.begin(), all.end(), 0);
      return all;
    }());
    MatrixQ rr = r;
    const auto cols = rref_in_place(rr);  // independent columns of the representative rows
    std::vector<std::size_t> all_rows(mons.size());
    std::iota(all_rows.begin(), all_rows.end(), 0);
    const MatrixQ rs_inv = inverse(r.select([&] {
      std::vector<std::size_t> rr_idx(reps.size());
      std::iota(rr_idx.begin(), rr_idx.end(), 0);
      return rr_idx;
    }(), cols));
    MatrixQ proj = p.select(all_rows, cols) * rs_inv;
    if (!(proj * r == p)) throw ModelError("verbitsky: inconsistent quotient projection in degree " + std::to_string(d));
    for (std::size_t i = 0; i < mons.size(); ++i) {
      const Bidegree bi = monomial_bidegree(mons[i], m.h2.labels);
      for (std::size_t k = 0; k < reps.size(); ++k)
        if (!proj(i, k).is_zero() && monomial_bidegree(mons[reps[k]], m.h2.labels) != bi)
          throw ModelError("verbitsky: pairing kernel in degree " + std::to_string(2 * d) +
                           " is not bigraded (monomial " + monomial_name(mons[i]) + ")");
    }
    pres.representatives.push_back(std::move(reps));
    pres.projection.push_back(std::move(proj));
  }

  for (unsigned d = 0; d <= 2 * n; ++d) {
    GradedPiece piece;
    for (auto r : pres.representatives[d]) {
      piece.bidegree.push_back(monomial_bidegree(pres.monomials[d][r], m.h2.labels));
      piece.names.push_back(monomial_name(pres.monomials[d][r]));
    }
    piece.dim = piece.bidegree.size();
    m.pieces.push_back(std::move(piece));
  }
  finalize_offsets(m);

  for (unsigned d1 = 0; d1 <= 2 * n; ++d1)
    for (unsigned d2 = 0; d1 + d2 <= 2 * n; ++d2) {
      const auto& r1 = pres.representatives[d1];
      const auto& r2 = pres.representatives[d2];
      const unsigned d = d1 + d2;
      MatrixQ t(r1.size() * r2.size(), m.pieces[d].dim);
      for (std::size_t a = 0; a < r1.size(); ++a)
        for (std::size_t c = 0; c < r2.size(); ++c) {
          const std::size_t mono = index[d][add(pres.monomials[d1][r1[a]], pres.monomials[d2][r2[c]])];
          auto src = pres.projection[d].row(mono);
          std::copy(src.begin(), src.end(), t.row(a * r2.size() + c).begin());
        }
      m.mult[{d1, d2}] = std::move(t);
    }

  const std::size_t top_rep = pres.representatives[2 * n].at(0);
  m.integral = {top_integral[top_rep]};
  m.classes = default_classes(b);

  m.conj = MatrixQ(m.total_dim(), m.total_dim());
  for (unsigned d = 0; d <= 2 * n; ++d) {
    const auto& reps = pres.representatives[d];
    const std::size_t off = m.pieces[d].offset;
    for (std::size_t a = 0; a < reps.size(); ++a) {
      Exponents e = pres.monomials[d][reps[a]];
      std::swap(e[0], e[1]);
      auto img = pres.projection[d].row(index[d][e]);
      for (std::size_t k = 0; k < img.size(); ++k) m.conj(off + k, off + a) = img[k];
    }
  }
  m.presentation = std::move(pres);
  return m;
}

GradedAlgebraModel build_model(const ModelSpec& spec) {
  return spec.kind == ModelKind::k3 ? build_k3(spec) : build_verbitsky(spec);
}

MatrixQ lefschetz_matrix(const GradedAlgebraModel& model, std::span<const Rational> x) {
  const std::size_t N = model.total_dim();
  MatrixQ L(N, N);
  const std::size_t b = model.piece(1).dim;
  if (x.size() != b) throw DimensionMismatch("lefschetz: expected a degree-2 vector");
  for (unsigned d = 0; d + 1 < model.pieces.size(); ++d) {
    const GradedPiece& src = model.pieces[d];
    const GradedPiece& dst = model.pieces[d + 1];
    const MatrixQ& t = model.mult.at({1, d});
    for (std::size_t a = 0; a < b; ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t j = 0; j < src.dim; ++j) {
        auto row = t.row(a * src.dim + j);
        for (std::size_t k = 0; k < dst.dim; ++k)
          if (!row[k].is_zero()) L(dst.offset + k, src.offset + j) += x[a] * row[k];
      }
    }
  }
  return L;
}

NilpotentOperator lefschetz(const GradedAlgebraModel& model, std::span<const Rational> x) {
  return NilpotentOperator(lefschetz_matrix(model, x));
}

namespace {

VectorQ basis_product(const GradedAlgebraModel& m, unsigned d1, std::size_t a, unsigned d2, std::size_t b) {
  const auto row = m.mult.at({d1, d2}).row(a * m.pieces[d2].dim + b);
  return VectorQ(row.begin(), row.end());
}

CheckResult check_unit(const GradedAlgebraModel& m) {
  CheckResult r("model.unit");
  if (m.pieces.empty() || m.pieces[0].dim != 1) {
    r.fail({{"reason", "degree 0 piece must be one-dimensional"}});
    return r;
  }
  for (unsigned d = 0; d < m.pieces.size(); ++d)
    for (std::size_t b = 0; b < m.pieces[d].dim; ++b) {
      const VectorQ e = unit_vector(m.pieces[d].dim, b);
      r.expect(basis_product(m, 0, 0, d, b) == e && basis_product(m, d, b, 0, 0) == e,
               {{"degree", 2 * d}, {"basis", m.pieces[d].names[b]}});
    }
  return r;
}

CheckResult check_commutativity(const GradedAlgebraModel& m) {
  CheckResult r("model.commutativity");
  for (unsigned d1 = 0; d1 < m.pieces.size(); ++d1)
    for (unsigned d2 = 0; d1 + d2 < m.pieces.size(); ++d2)
      for (std::size_t a = 0; a < m.pieces[d1].dim; ++a)
        for (std::size_t b = 0; b < m.pieces[d2].dim; ++b)
          r.expect(basis_product(m, d1, a, d2, b) == basis_product(m, d2, b, d1, a),
                   {{"a", m.pieces[d1].names[a]}, {"b", m.pieces[d2].names[b]}});
  return r;
}

CheckResult check_associativity(const GradedAlgebraModel& m) {
  CheckResult r("model.associativity");
  const unsigned top = static_cast<unsigned>(m.pieces.size()) - 1;
  std::size_t triples = 0;
  for (unsigned d1 = 0; d1 <= top; ++d1)
    for (unsigned d2 = 0; d1 + d2 <= top; ++d2)
      for (unsigned d3 = 0; d1 + d2 + d3 <= top; ++d3) {
        const auto& p1 = m.pieces[d1];
        const auto& p2 = m.pieces[d2];
        const auto& p3 = m.pieces[d3];
        for (std::size_t a = 0; a < p1.dim; ++a)
          for (std::size_t b = 0; b < p2.dim; ++b) {
            const VectorQ ab = basis_product(m, d1, a, d2, b);
            for (std::size_t c = 0; c < p3.dim; ++c) {
              ++triples;
              const VectorQ left = m.multiply(d1 + d2, ab, d3, unit_vector(p3.dim, c));
              const VectorQ right = m.multiply(d1, unit_vector(p1.dim, a), d2 + d3, basis_product(m, d2, b, d3, c));
              if (left != right && r.witnesses.size() < 20)
                r.fail({{"a", p1.names[a]}, {"b", p2.names[b]}, {"c", p3.names[c]}});
              else if (left != right)
                r.passed = false;
            }
          }
      }
  r.data["triples"] = triples;
  return r;
}

CheckResult check_poincare(const GradedAlgebraModel& m) {
  CheckResult r("model.poincare_nondegenerate");
  const unsigned top = static_cast<unsigned>(m.pieces.size()) - 1;
  if (m.integral.size() != m.pieces[top].dim) {
    r.fail({{"reason", "integral has wrong length"}});
    return r;
  }
  for (unsigned d = 0; d <= top; ++d) {
    const std::size_t n1 = m.pieces[d].dim, n2 = m.pieces[top - d].dim;
    MatrixQ pairing(n1, n2);
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n2; ++b) {
        const VectorQ prod = basis_product(m, d, a, top - d, b);
        Rational s;
        for (std::size_t k = 0; k < prod.size(); ++k) s += prod[k] * m.integral[k];
        pairing(a, b) = s;
      }
    const std::size_t rk = rank(pairing);
    r.expect(n1 == n2 && rk == n1, {{"degree", 2 * d}, {"rank", rk}, {"dim", n1}});
  }
  return r;
}

CheckResult check_bigrading(const GradedAlgebraModel& m) {
  CheckResult r("model.bigraded");
  const int two_n = static_cast<int>(2 * m.n);
  for (unsigned d = 0; d < m.pieces.size(); ++d)
    for (std::size_t i = 0; i < m.pieces[d].dim; ++i) {
      const Bidegree b = m.pieces[d].bidegree[i];
      r.expect(b.p + b.q == static_cast<int>(2 * d) && b.p >= 0 && b.q >= 0 && b.p <= two_n && b.q <= two_n,
               {{"reason", "bidegree out of range"}, {"basis", m.pieces[d].names[i]}});
    }
  for (const auto& [key, t] : m.mult) {
    const auto [d1, d2] = key;
    for (std::size_t a = 0; a < m.pieces[d1].dim; ++a)
      for (std::size_t b = 0; b < m.pieces[d2].dim; ++b) {
        const Bidegree ba = m.pieces[d1].bidegree[a], bb = m.pieces[d2].bidegree[b];
        const Bidegree want{ba.p + bb.p, ba.q + bb.q};
        auto row = t.row(a * m.pieces[d2].dim + b);
        for (std::size_t k = 0; k < row.size(); ++k)
          if (!row[k].is_zero() && m.pieces[d1 + d2].bidegree[k] != want)
            r.fail({{"a", m.pieces[d1].names[a]}, {"b", m.pieces[d2].names[b]}, {"component", m.pieces[d1 + d2].names[k]}});
      }
  }
  return r;
}

CheckResult check_conjugation(const GradedAlgebraModel& m) {
  CheckResult r("model.conjugation");
  const std::size_t N = m.total_dim();
  if (m.conj.rows() != N || m.conj.cols() != N) {
    r.fail({{"reason", "conj has wrong size"}});
    return r;
  }
  r.expect(m.conj * m.conj == MatrixQ::identity(N), {{"reason", "conj is not an involution"}});
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (m.conj(i, j).is_zero()) continue;
      const Bidegree bi = m.bidegree_of(i), bj = m.bidegree_of(j);
      if (m.degree_of(i) != m.degree_of(j) || bi.p != bj.q || bi.q != bj.p)
        r.fail({{"reason", "conj does not swap (p,q) and (q,p)"}, {"row", i}, {"col", j}});
    }
  // conj(e_a e_b) = conj(e_a) conj(e_b)
  for (unsigned d1 = 0; d1 < m.pieces.size(); ++d1)
    for (unsigned d2 = d1; d1 + d2 < m.pieces.size(); ++d2)
      for (std::size_t a = 0; a < m.pieces[d1].dim; ++a)
        for (std::size_t b = 0; b < m.pieces[d2].dim; ++b) {
          const VectorQ ea = unit_vector(N, m.pieces[d1].offset + a);
          const VectorQ eb = unit_vector(N, m.pieces[d2].offset + b);
          const VectorQ lhs = m.conj.apply(m.multiply(ea, eb));
          const VectorQ rhs = m.multiply(m.conj.apply(ea), m.conj.apply(eb));
          if (lhs != rhs) r.fail({{"reason", "conj is not multiplicative"}, {"a", m.pieces[d1].names[a]}, {"b", m.pieces[d2].names[b]}});
        }
  return r;
}

CheckResult check_quadratic_space(const GradedAlgebraModel& m) {
  CheckResult r("model.quadratic_space");
  const MatrixQ& g = m.h2.gram;
  const std::size_t b = g.rows();
  r.data["b2"] = b;
  if (!g.is_square() || m.h2.labels.size() != b || m.pieces.size() < 2 || m.pieces[1].dim != b) {
    r.fail({{"reason", "H^2 shape mismatch"}});
    return r;
  }
  r.expect(g == g.transpose(), {{"reason", "gram not symmetric"}});
  r.expect(rank(g) == b, {{"reason", "gram degenerate"}});
  const auto count = [&](ClassLabel l) { return std::count(m.h2.labels.begin(), m.h2.labels.end(), l); };
  r.expect(count(ClassLabel::sigma) == 1 && count(ClassLabel::sigma_bar) == 1,
           {{"reason", "exactly one sigma and one sigma_bar label required"}});
  const auto s = std::find(m.h2.labels.begin(), m.h2.labels.end(), ClassLabel::sigma) - m.h2.labels.begin();
  const auto sb = std::find(m.h2.labels.begin(), m.h2.labels.end(), ClassLabel::sigma_bar) - m.h2.labels.begin();
  if (static_cast<std::size_t>(s) < b && static_cast<std::size_t>(sb) < b) {
    r.expect(g(s, s).is_zero() && g(sb, sb).is_zero(), {{"reason", "sigma or sigma_bar not isotropic"}});
    r.expect(!g(s, sb).is_zero(), {{"reason", "q(sigma, sigma_bar) = 0"}});
  }
  return r;
}

CheckResult check_classes(const GradedAlgebraModel& m) {
  CheckResult r("model.distinguished_classes");
  const auto& c = m.classes;
  const auto& q = m.h2;
  const std::size_t b = q.dim();
  if (c.sigma.size() != b || c.sigma_bar.size() != b || c.beta.size() != b || c.omega.size() != b) {
    r.fail({{"reason", "class vectors have wrong length"}});
    return r;
  }
  r.data["q(sigma,sigma_bar)"] = q.form(c.sigma, c.sigma_bar).str();
  r.data["q(beta,omega)"] = q.form(c.beta, c.omega).str();
  r.data["q(omega,omega)"] = q.form(c.omega, c.omega).str();
  r.expect(q.form(c.beta, c.beta).is_zero(), {{"reason", "beta is not isotropic"}});
  for (std::size_t i = 0; i < b; ++i)
    if (q.labels[i] != ClassLabel::hodge11 && !c.beta[i].is_zero()) r.fail({{"reason", "beta is not of type (1,1)"}});
  r.expect(!q.form(c.omega, c.omega).is_zero(), {{"reason", "q(omega, omega) = 0"}});
  r.expect(!q.form(c.beta, c.omega).is_zero(), {{"reason", "q(beta, omega) = 0"}});
  r.expect(!q.form(c.sigma, c.sigma_bar).is_zero(), {{"reason", "q(sigma, sigma_bar) = 0"}});
  r.expect(rank(MatrixQ::from_rows({c.sigma, c.sigma_bar, c.beta, c.omega}, b)) == 4,
           {{"reason", "sigma, sigma_bar, beta, omega are linearly dependent"}});
  // conjugation on H^2: swaps sigma and sigma_bar, fixes beta and omega
  const MatrixQ c2 = m.conj.select(m.indices_of_piece(1), m.indices_of_piece(1));
  r.expect(c2.apply(c.sigma) == c.sigma_bar, {{"reason", "conj(sigma) != sigma_bar"}});
  r.expect(c2.apply(c.beta) == c.beta, {{"reason", "conj(beta) != beta"}});
  r.expect(c2.apply(c.omega) == c.omega, {{"reason", "conj(omega) != omega"}});
  return r;
}

CheckResult check_ideal(const GradedAlgebraModel& m) {
  CheckResult r("model.pairing_kernel_ideal");
  const auto& pres = *m.presentation;
  const unsigned top = 2 * m.n;
  std::vector<std::map<Exponents, std::size_t>> index(top + 1);
  for (unsigned d = 0; d <= top; ++d)
    for (std::size_t i = 0; i < pres.monomials[d].size(); ++i) index[d][pres.monomials[d][i]] = i;
  std::size_t probes = 0;
  for (unsigned d = m.n + 1; d <= top; ++d) {
    const auto& reps = pres.representatives[d];
    std::vector<bool> is_rep(pres.monomials[d].size(), false);
    for (auto i : reps) is_rep[i] = true;
    for (std::size_t mono = 0; mono < pres.monomials[d].size(); ++mono) {
      if (is_rep[mono]) continue;
      // kernel vector: e_mono - Σ_k proj(mono, k) e_{rep_k}
      for (unsigned d2 = 1; d + d2 <= top; ++d2)
        for (const auto& u : pres.monomials[d2]) {
          ++probes;
          const unsigned dd = d + d2;
          auto lhs_row = pres.projection[dd].row(index[dd][add(pres.monomials[d][mono], u)]);
          VectorQ acc(lhs_row.begin(), lhs_row.end());
          for (std::size_t k = 0; k < reps.size(); ++k) {
            const Rational& c = pres.projection[d](mono, k);
            if (c.is_zero()) continue;
            auto row = pres.projection[dd].row(index[dd][add(pres.monomials[d][reps[k]], u)]);
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j].sub_mul(c, row[j]);
          }
          if (!is_zero(acc) && r.witnesses.size() < 20)
            r.fail({{"kernel_monomial", monomial_name(pres.monomials[d][mono])}, {"times", monomial_name(u)}});
        }
    }
  }
  r.data["probes"] = probes;
  return r;
}

}  // namespace

CheckFragment validate(const GradedAlgebraModel& model) {
  CheckFragment out;
  out.push_back(timed([&] { return check_quadratic_space(model); }));
  out.push_back(timed([&] { return check_unit(model); }));
  out.push_back(timed([&] { return check_commutativity(model); }));
  out.push_back(timed([&] { return check_associativity(model); }));
  out.push_back(timed([&] { return check_poincare(model); }));
  out.push_back(timed([&] { return check_bigrading(model); }));
  out.push_back(timed([&] { return check_conjugation(model); }));
  out.push_back(timed([&] { return check_classes(model); }));
  if (model.presentation) out.push_back(timed([&] { return check_ideal(model); }));
  return out;
}

GradedAlgebraModel with_rescaled_classes(const GradedAlgebraModel& model, const Rational& beta_scale,
                                         const Rational& sigma_scale) {
  if (beta_scale.is_zero() || sigma_scale.is_zero()) throw std::invalid_argument("rescaling by zero");
  GradedAlgebraModel m = model;
  for (auto& x : m.classes.beta) x *= beta_scale;
  for (auto& x : m.classes.sigma) x *= sigma_scale;
  for (auto& x : m.classes.sigma_bar) x *= sigma_scale;
  return m;
}

std::vector<std::size_t> betti_numbers(const GradedAlgebraModel& model) {
  std::vector<std::size_t> b(4 * model.n + 1, 0);
  for (unsigned d = 0; d < model.pieces.size(); ++d) b[2 * d] = model.pieces[d].dim;
  return b;
}

}  // namespace phl
