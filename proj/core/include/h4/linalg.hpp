#pragma once

#include <cstddef>
#include <vector>

#include "h4/field.hpp"

namespace h4 {

/// Dense row-major matrix over Q(sqrt5).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

struct RowEchelon {
  Matrix reduced;                      ///< row-equivalent, pivot columns cleared
  std::vector<std::size_t> pivot_cols;  ///< pivot i sits in row i
};

/// Fraction-free (Bareiss-style) Gauss-Jordan elimination. Rows are first
/// scaled into Z[phi]; each update is row_i <- (p*row_i - a_ic*row_p) / p_prev.
RowEchelon fraction_free_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}; each vector scaled so its first nonzero entry is 1.
std::vector<std::vector<FieldElement>> nullspace(const Matrix& m);

}  // namespace h4
