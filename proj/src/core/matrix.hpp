#pragma once

#include <vector>

#include "core/poly.hpp"

namespace skewrank {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T init = T{})
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, init) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      require(static_cast<int>(rows[i].size()) == c, errc::parse_error, "ragged matrix rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using MatQ = Matrix<Rat>;
using MatP = Matrix<Poly>;

// Exact determinant: fraction-free Bareiss elimination on a row-wise
// common-denominator integer lift.  Empty matrix has determinant 1.
Rat det(const MatQ& m);

// Determinant over Q[t], Bareiss on an integer-coefficient lift with exact
// polynomial division at every step.
Poly det_poly(const MatP& m);

}  // namespace skewrank
