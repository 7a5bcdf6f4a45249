#pragma once

// Dense matrices over Q(q) and exact Gaussian elimination.

#include <string>
#include <vector>

#include "uqkit/qscalar.hpp"

namespace uqkit {

using QVector = std::vector<QScalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  /// Row-major initializer; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<QScalar>>& rows, int cols = -1);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  QScalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const QScalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  bool is_zero() const;
  QVector apply(const QVector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const QScalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<QScalar> data_;
};

bool is_zero(const QVector& v);

/// Reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(Matrix& m);
int rank(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<QVector> nullspace(Matrix m);

}  // namespace uqkit
