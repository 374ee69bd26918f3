#include "phl/subspace.hpp"

#include <algorithm>

#include "phl/errors.hpp"

namespace phl {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimensions differ (" +
                            std::to_string(a.ambient_dim()) + " vs " +
                            std::to_string(b.ambient_dim()) + ")");
}

MatrixQ stack(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ s(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) std::copy(a.row(r).begin(), a.row(r).end(), s.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r)
    std::copy(b.row(r).begin(), b.row(r).end(), s.row(a.rows() + r).begin());
  return s;
}

}  // namespace

Subspace Subspace::full(std::size_t n) { return span(MatrixQ::identity(n)); }

Subspace Subspace::span(const MatrixQ& rows) {
  MatrixQ m = rows;
  auto pivots = rref_in_place(m);
  Subspace s(rows.cols());
  s.basis_ = MatrixQ(pivots.size(), rows.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    std::copy(m.row(r).begin(), m.row(r).end(), s.basis_.row(r).begin());
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(const std::vector<VectorQ>& vectors, std::size_t ambient_dim) {
  return span(MatrixQ::from_rows(vectors, ambient_dim));
}

Subspace Subspace::coordinate(std::size_t n, std::span<const std::size_t> indices) {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Subspace s(n);
  s.basis_ = MatrixQ(idx.size(), n);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (idx[r] >= n) throw DimensionMismatch("Subspace::coordinate: index out of range");
    s.basis_(r, idx[r]) = 1;
  }
  s.pivots_ = std::move(idx);
  return s;
}

VectorQ Subspace::vector(std::size_t i) const {
  return VectorQ(basis_.row(i).begin(), basis_.row(i).end());
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::contains: vector length mismatch");
  // In RREF the coefficient on row r is v[pivot_r]; v is a member iff that
  // combination reproduces v.
  VectorQ rest(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f.is_zero()) continue;
    auto row = basis_.row(r);
    for (std::size_t c = pivots_[r]; c < ambient_; ++c)
      if (!row[c].is_zero()) rest[c].sub_mul(f, row[c]);
  }
  return phl::is_zero(std::span<const Rational>(rest));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace::contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::mapped(const MatrixQ& m) const {
  if (m.cols() != ambient_) throw DimensionMismatch("Subspace::mapped: operator size mismatch");
  // Rows of basis * m^T are the images of the basis vectors.
  return span(basis_ * m.transpose());
}

Reduction reduce(const MatrixQ& m) {
  Subspace s = Subspace::span(m);
  const std::size_t r = s.dim();
  return {std::move(s), r};
}

Subspace kernel(const MatrixQ& m) {
  MatrixQ r = m;
  const auto pivots = rref_in_place(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<VectorQ> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!r(i, f).is_zero()) v[pivots[i]] = -r(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, n);
}

Subspace image(const MatrixQ& m) { return Subspace::span(m.transpose()); }

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return kernel(s.basis());
}

Subspace meet(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "meet");
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  const Subspace aa = annihilator(a);
  const Subspace ab = annihilator(b);
  return kernel(stack(aa.basis(), ab.basis()));
}

Subspace join(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "join");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace preimage(const MatrixQ& m, const Subspace& s) {
  if (s.ambient_dim() != m.rows())
    throw DimensionMismatch("preimage: subspace lives in dimension " + std::to_string(s.ambient_dim()) +
                            " but the map has " + std::to_string(m.rows()) + " rows");
  if (s.is_full()) return Subspace::full(m.cols());
  const Subspace ann = annihilator(s);
  return kernel(ann.basis() * m);
}

void SpanBuilder::reduce_in_place(VectorQ& v) const {
  for (const Row& row : rows_) {
    if (v[row.pivot].is_zero()) continue;
    const Rational f = v[row.pivot];
    for (const auto& [c, x] : row.entries) v[c].sub_mul(f, x);
  }
}

bool SpanBuilder::insert(std::span<const Rational> v) {
  if (v.size() != ambient_) throw DimensionMismatch("SpanBuilder::insert: vector length mismatch");
  VectorQ w(v.begin(), v.end());
  reduce_in_place(w);
  auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == w.end()) return false;
  Row row;
  row.pivot = static_cast<std::size_t>(it - w.begin());
  const Rational inv = Rational(1) / *it;
  for (std::size_t c = row.pivot; c < ambient_; ++c)
    if (!w[c].is_zero()) row.entries.emplace_back(static_cast<std::uint32_t>(c), w[c] * inv);
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), row.pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, std::move(row));
  return true;
}

bool SpanBuilder::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("SpanBuilder::contains: vector length mismatch");
  VectorQ w(v.begin(), v.end());
  reduce_in_place(w);
  return is_zero(w);
}

Subspace SpanBuilder::to_subspace() const {
  MatrixQ m(rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, x] : rows_[r].entries) m(r, c) = x;
  return Subspace::span(m);
}

}  // namespace phl
