#include "agss/linalg.hpp"

#include <stdexcept>

namespace agss::linalg {

Matrix::Matrix(const Field& f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::from_rows(const Field& f,
                         const std::vector<std::vector<FieldElement>>& rows) {
  size_t r = rows.size();
  size_t c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<FieldElement> Matrix::row(size_t i) const {
  return std::vector<FieldElement>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<FieldElement> Matrix::col(size_t j) const {
  std::vector<FieldElement> c;
  c.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l) {
      const FieldElement& x = at(i, l);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += x * o.at(l, j);
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<FieldElement> r(rows_, field_.zero());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<FieldElement> Matrix::apply_left(const std::vector<FieldElement>& u) const {
  if (u.size() != rows_) throw std::invalid_argument("vector length mismatch");
  std::vector<FieldElement> r(cols_, field_.zero());
  for (size_t i = 0; i < rows_; ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[j] += u[i] * at(i, j);
  }
  return r;
}

Matrix Matrix::selected_columns(const std::vector<size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw std::invalid_argument("column index out of range");
    for (size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  }
  return r;
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const {
  Matrix m(*this);
  size_t lead = 0;
  for (size_t col = 0; col < cols_ && lead < rows_; ++col) {
    size_t piv = lead;
    while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    for (size_t j = 0; j < cols_; ++j) std::swap(m.at(lead, j), m.at(piv, j));
    FieldElement inv = m.at(lead, col).inverse();
    for (size_t j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      FieldElement c = m.at(i, col);
      for (size_t j = 0; j < cols_; ++j) m.at(i, j) -= c * m.at(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return m;
}

size_t Matrix::rank() const {
  std::vector<size_t> piv;
  rref(&piv);
  return piv.size();
}

Matrix Matrix::kernel_basis() const {
  std::vector<size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_piv[free]) continue;
    std::vector<FieldElement> v(cols_, field_.zero());
    v[free] = field_.one();
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  Matrix k = basis.empty() ? Matrix(field_, 0, cols_) : from_rows(field_, basis);
  return k;
}

std::optional<std::vector<FieldElement>> Matrix::solve(
    const std::vector<FieldElement>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("rhs length mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  std::vector<size_t> piv;
  Matrix r = aug.rref(&piv);
  std::vector<FieldElement> x(cols_, field_.zero());
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == cols_) return std::nullopt;  // pivot in the rhs column
    x[piv[i]] = r.at(i, cols_);
  }
  return x;
}

bool Matrix::same_row_space(const Matrix& o) const {
  if (cols_ != o.cols_ || field_ != o.field_) return false;
  Matrix a = rref(), b = o.rref();
  // Compare nonzero rows of the canonical forms.
  size_t ra = rank(), rb = o.rank();
  if (ra != rb) return false;
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace agss::linalg
