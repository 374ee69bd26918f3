#include "phl/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "phl/errors.hpp"

namespace phl {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("MatrixQ: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::diagonal(std::span<const Rational> d) {
  MatrixQ m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("MatrixQ::from_rows: row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

VectorQ MatrixQ::column(std::size_t c) const {
  VectorQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool MatrixQ::is_zero() const { return phl::is_zero(a_); }

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ MatrixQ::select(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const {
  MatrixQ s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

MatrixQ MatrixQ::power(unsigned k) const {
  if (!is_square()) throw DimensionMismatch("MatrixQ::power: not square");
  MatrixQ result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * (*this);
  return result;
}

VectorQ MatrixQ::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("MatrixQ::apply: vector length mismatch");
  VectorQ out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      if (!x.is_zero() && !v[c].is_zero()) out[r] += x * v[c];
    }
  return out;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("MatrixQ +: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("MatrixQ -: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

MatrixQ& MatrixQ::operator*=(const Rational& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("MatrixQ *: inner dimension mismatch");
  MatrixQ c(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        t = aik;
        t *= bkj;
        c(i, j) += t;
      }
    }
  return c;
}

std::string MatrixQ::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) { return a * b - b * a; }

std::vector<std::size_t> rref_in_place(MatrixQ& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != r) std::swap_ranges(m.row(pr).begin(), m.row(pr).end(), m.row(r).begin());
    const Rational inv = Rational(1) / m(r, c);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(r, j).is_zero()) continue;
      m(r, j) *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j : nz) m(i, j).sub_mul(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const MatrixQ& m) {
  MatrixQ copy = m;
  return rref_in_place(copy).size();
}

MatrixQ inverse(const MatrixQ& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  MatrixQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace phl
