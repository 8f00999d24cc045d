// Dense matrices over a finite field: Gaussian elimination, rank, kernels,
// and linear solves.  All arithmetic is exact.

#pragma once

#include <optional>
#include <vector>

#include "agss/gf.hpp"

namespace agss::linalg {

using gf::Field;
using gf::FieldElement;

class Matrix {
 public:
  Matrix(const Field& f, size_t rows, size_t cols);  // zero-filled
  static Matrix from_rows(const Field& f,
                          const std::vector<std::vector<FieldElement>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<FieldElement> row(size_t i) const;
  std::vector<FieldElement> col(size_t j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  // M * v and u * M.
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  std::vector<FieldElement> apply_left(const std::vector<FieldElement>& u) const;

  Matrix selected_columns(const std::vector<size_t>& idx) const;

  // Reduced row echelon form; pivot column indices appended to *pivots.
  Matrix rref(std::vector<size_t>* pivots = nullptr) const;
  size_t rank() const;

  // Rows form a basis of { v : M v = 0 }.
  Matrix kernel_basis() const;

  // Any x with M x = rhs, or nullopt when inconsistent.
  std::optional<std::vector<FieldElement>> solve(
      const std::vector<FieldElement>& rhs) const;

  bool same_row_space(const Matrix& o) const;
  bool is_zero() const;

 private:
  Field field_;
  size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

}  // namespace agss::linalg
