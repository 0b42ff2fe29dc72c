#pragma once

#include <optional>
#include <vector>

#include "versal/polynomial.hpp"

namespace versal {

/// Element of a free module: one polynomial per component.
using Vector = std::vector<Polynomial>;

Vector zeroVector(const RingPtr& ring, std::size_t rank);
bool isZero(const Vector& v);

/// Matrix of polynomials. When degree data is attached, entry (i, j) is
/// homogeneous of degree colDegree(j) - rowDegree(i).
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix fromColumns(RingPtr ring, std::size_t rows, const std::vector<Vector>& cols);
  static PolyMatrix row(RingPtr ring, const std::vector<Polynomial>& entries);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void setColumn(std::size_t c, const Vector& v);
  std::vector<Vector> columns() const;

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& o);
  /// Horizontal concatenation [this | o].
  PolyMatrix concat(const PolyMatrix& o) const;
  PolyMatrix selectColumns(const std::vector<std::size_t>& cols) const;
  PolyMatrix tTruncate(int k) const;
  PolyMatrix tPart(int k) const;
  PolyMatrix embed(const RingPtr& target) const;
  bool isZero() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  const std::vector<Degree>& rowDegrees() const { return rowDegrees_; }
  const std::vector<Degree>& colDegrees() const { return colDegrees_; }
  bool hasDegrees() const { return !rowDegrees_.empty() || rows_ == 0; }
  void setDegrees(std::vector<Degree> rowDegrees, std::vector<Degree> colDegrees);
  /// Attaches row degrees and infers column degrees from the entries; returns
  /// false (and leaves the matrix ungraded) if some column is inhomogeneous.
  bool inferColumnDegrees(std::vector<Degree> rowDegrees);

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
  std::vector<Degree> rowDegrees_;
  std::vector<Degree> colDegrees_;
};

}  // namespace versal
