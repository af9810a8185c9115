#include "holocalc/linalg.hpp"

#include <utility>

namespace holocalc {

namespace {

// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix Matrix::hcat(const Matrix& rhs) const {
  Matrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Scalar determinant(Matrix m) {
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = Scalar(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix aug = m.hcat(Matrix::identity(n));
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

Matrix null_space(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis(free_cols[j], j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], j) = -r(i, free_cols[j]);
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

bool is_positive_definite(const Matrix& m) {
  if (!m.is_symmetric()) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (determinant(m.block(0, 0, k, k)) <= 0) return false;
  return true;
}

}  // namespace holocalc
