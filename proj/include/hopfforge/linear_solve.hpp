#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfforge/scalar.hpp"

namespace hopfforge {

// Dense matrix of field elements, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);

  static Matrix identity(std::size_t n, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

  Matrix pow(unsigned k) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

struct LinearSolution {
  std::vector<Scalar> x;
  std::size_t rank = 0;
  bool unique = false;
};

// Solves A x = b exactly. Over Q each row is scaled to integers and reduced
// by fraction-free (Bareiss) elimination; over F_p by Gauss elimination. Free
// variables of an underdetermined system are set to 0. Returns nullopt when
// the system is inconsistent.
std::optional<LinearSolution> solve_linear_system(const Matrix& A,
                                                  const std::vector<Scalar>& b);

}  // namespace hopfforge
