#include "versal/exactla.hpp"

#include "versal/errors.hpp"

namespace versal {

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Scalar> ScalarMatrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
  ScalarMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

std::vector<Scalar> ScalarMatrix::operator*(const std::vector<Scalar>& v) const {
  if (cols_ != v.size()) throw DimensionError("matrix-vector dimension mismatch");
  std::vector<Scalar> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
  return r;
}

bool ScalarMatrix::isZero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {

using IntRow = std::vector<Integer>;

IntRow toIntegerRow(const ScalarMatrix& m, std::size_t r) {
  Integer l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Integer& d = m(r, c).get_den();
    if (d != 1) l = lcm(l, d);
  }
  IntRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    row[c] = m(r, c).get_num() * (l / m(r, c).get_den());
  return row;
}

void stripContent(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row) x /= g;
}

}  // namespace

RowEchelon rref(const ScalarMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(toIntegerRow(m, r));
    stripContent(rows.back());
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    const IntRow& piv = rows[next];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c] == 0) continue;
      Integer a = piv[c], b = rows[r][c];
      Integer g = gcd(a, b);
      a /= g;
      b /= g;
      for (std::size_t k = 0; k < m.cols(); ++k) rows[r][k] = a * rows[r][k] - b * piv[k];
      stripContent(rows[r]);
    }
    pivots.push_back(c);
    ++next;
  }
  RowEchelon out{ScalarMatrix(m.rows(), m.cols()), pivots};
  for (std::size_t r = 0; r < next; ++r) {
    const Integer& pv = rows[r][pivots[r]];
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (rows[r][k] == 0) continue;
      Scalar q(rows[r][k], pv);
      q.canonicalize();
      out.reduced(r, k) = q;
    }
  }
  return out;
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).pivotColumns.size(); }

ScalarMatrix kernelBasis(const ScalarMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto c : e.pivotColumns) isPivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!isPivot[c]) free.push_back(c);
  ScalarMatrix k(m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivotColumns.size(); ++r)
      k(e.pivotColumns[r], j) = -e.reduced(r, free[j]);
  }
  return k;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  ScalarMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = rref(aug);
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < e.pivotColumns.size(); ++r) {
    std::size_t c = e.pivotColumns[r];
    if (c == m.cols()) return std::nullopt;
    x[c] = e.reduced(r, m.cols());
  }
  return x;
}

std::vector<std::size_t> complementColumns(const ScalarMatrix& base,
                                           const ScalarMatrix& candidates) {
  if (base.rows() != candidates.rows() && base.cols() && candidates.cols())
    throw DimensionError("column blocks differ in height");
  std::size_t rows = std::max(base.rows(), candidates.rows());
  ScalarMatrix joined(rows, base.cols() + candidates.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < base.cols(); ++c) joined(r, c) = base(r, c);
    for (std::size_t c = 0; c < candidates.cols(); ++c)
      joined(r, base.cols() + c) = candidates(r, c);
  }
  std::vector<std::size_t> out;
  for (auto c : rref(joined).pivotColumns)
    if (c >= base.cols()) out.push_back(c - base.cols());
  return out;
}

}  // namespace versal
