#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holocalc/scalar.hpp"

namespace holocalc {

/// Dense row-major matrix over the exact rationals. Sizes in this project
/// never exceed a few hundred, so plain Gaussian elimination is enough.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool operator==(const Matrix& rhs) const = default;

  bool is_zero() const;
  bool is_symmetric() const;

  /// Horizontal concatenation [this | rhs].
  Matrix hcat(const Matrix& rhs) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Scalar determinant(Matrix m);
std::size_t rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the right null space, one column per basis vector. The basis is
/// the reduced-echelon one (free variables set to unit vectors), so it is
/// deterministic.
Matrix null_space(const Matrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Sylvester's criterion.
bool is_positive_definite(const Matrix& m);

}  // namespace holocalc
