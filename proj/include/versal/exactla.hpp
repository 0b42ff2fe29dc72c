#pragma once

#include <optional>
#include <vector>

#include "versal/ring.hpp"

namespace versal {

/// Dense row-major matrix over QQ.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ScalarMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  ScalarMatrix operator*(const ScalarMatrix& other) const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  bool isZero() const;

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivotColumns;
};

/// Reduced row-echelon form. Elimination runs fraction-free on integer rows
/// (content stripped after each step); pivots are the first nonzero entry in
/// column order.
RowEchelon rref(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);

/// Columns form a basis of {v : M v = 0}, one per free column, with a 1 in
/// the free position.
ScalarMatrix kernelBasis(const ScalarMatrix& m);

/// Some x with M x = b (free variables zero), or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& b);

/// Indices of columns of `candidates` that, taken in order, extend the column
/// span of `base` to the span of [base | candidates].
std::vector<std::size_t> complementColumns(const ScalarMatrix& base,
                                           const ScalarMatrix& candidates);

}  // namespace versal
