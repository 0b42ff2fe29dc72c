#include "versal/polymatrix.hpp"

#include "versal/errors.hpp"

namespace versal {

Vector zeroVector(const RingPtr& ring, std::size_t rank) {
  return Vector(rank, Polynomial(ring));
}

bool isZero(const Vector& v) {
  for (const auto& p : v)
    if (!p.isZero()) return false;
  return true;
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::fromColumns(RingPtr ring, std::size_t rows, const std::vector<Vector>& cols) {
  PolyMatrix m(std::move(ring), rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.setColumn(c, cols[c]);
  return m;
}

PolyMatrix PolyMatrix::row(RingPtr ring, const std::vector<Polynomial>& entries) {
  PolyMatrix m(std::move(ring), 1, entries.size());
  for (std::size_t c = 0; c < entries.size(); ++c) m(0, c) = entries[c];
  return m;
}

Vector PolyMatrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void PolyMatrix::setColumn(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<Vector> PolyMatrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  if (!rowDegrees_.empty() && colDegrees_.size() == cols_) {
    std::vector<Degree> rd, cd;
    for (const auto& d : colDegrees_) rd.push_back(-d);
    for (const auto& d : rowDegrees_) cd.push_back(-d);
    t.rowDegrees_ = std::move(rd);
    t.colDegrees_ = std::move(cd);
  }
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        const auto& b = o(k, j);
        if (a.isZero() || b.isZero()) continue;
        acc += a * b;
      }
      r(i, j) = std::move(acc);
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  PolyMatrix r = *this;
  r += o;
  return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = -p;
  return r;
}

PolyMatrix PolyMatrix::concat(const PolyMatrix& o) const {
  if (rows_ != o.rows_) throw DimensionError("concatenation height mismatch");
  PolyMatrix r(ring_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  if (hasDegrees() && o.hasDegrees() && colDegrees_.size() == cols_ &&
      o.colDegrees_.size() == o.cols_ && rowDegrees_ == o.rowDegrees_) {
    r.rowDegrees_ = rowDegrees_;
    r.colDegrees_ = colDegrees_;
    r.colDegrees_.insert(r.colDegrees_.end(), o.colDegrees_.begin(), o.colDegrees_.end());
  }
  return r;
}

PolyMatrix PolyMatrix::selectColumns(const std::vector<std::size_t>& cols) const {
  PolyMatrix r(ring_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, cols[j]);
  if (colDegrees_.size() == cols_) {
    r.rowDegrees_ = rowDegrees_;
    for (auto c : cols) r.colDegrees_.push_back(colDegrees_[c]);
  }
  return r;
}

PolyMatrix PolyMatrix::tTruncate(int k) const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = p.tTruncate(k);
  return r;
}

PolyMatrix PolyMatrix::tPart(int k) const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = p.tPart(k);
  return r;
}

PolyMatrix PolyMatrix::embed(const RingPtr& target) const {
  PolyMatrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].embed(target);
  r.rowDegrees_ = rowDegrees_;
  r.colDegrees_ = colDegrees_;
  return r;
}

bool PolyMatrix::isZero() const {
  for (const auto& p : data_)
    if (!p.isZero()) return false;
  return true;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void PolyMatrix::setDegrees(std::vector<Degree> rowDegrees, std::vector<Degree> colDegrees) {
  if (rowDegrees.size() != rows_ || colDegrees.size() != cols_)
    throw DimensionError("degree data does not match matrix shape");
  rowDegrees_ = std::move(rowDegrees);
  colDegrees_ = std::move(colDegrees);
}

bool PolyMatrix::inferColumnDegrees(std::vector<Degree> rowDegrees) {
  if (rowDegrees.size() != rows_) throw DimensionError("row degree count mismatch");
  std::vector<Degree> cols;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::optional<Degree> deg;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& p = (*this)(r, c);
      if (p.isZero()) continue;
      auto d = p.multiDegree();
      if (!d) return false;
      Degree total = *d + rowDegrees[r];
      if (deg && *deg != total) return false;
      deg = total;
    }
    cols.push_back(deg.value_or(ring_->zeroDegree()));
  }
  rowDegrees_ = std::move(rowDegrees);
  colDegrees_ = std::move(cols);
  return true;
}

}  // namespace versal
