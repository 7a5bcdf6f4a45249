#include "uqkit/linalg.hpp"

#include <algorithm>

#include "uqkit/errors.hpp"

namespace uqkit {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
  data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

Matrix Matrix::from_rows(const std::vector<std::vector<QScalar>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols)
      throw ShapeMismatch("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const QScalar& x) { return x.is_zero(); });
}

QVector Matrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
  QVector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[static_cast<std::size_t>(c)].is_zero())
        out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + QScalar(-1) * b; }

Matrix operator*(const QScalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const QScalar& x) { return x.is_zero(); });
}

std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pick = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pick = r;
        break;
      }
    if (pick < 0) continue;
    if (pick != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
    const QScalar scale = inv(m(row, col));
    for (int c = col; c < m.cols(); ++c) m(row, c) *= scale;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const QScalar f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

std::vector<QVector> nullspace(Matrix m) {
  const std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    QVector v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace uqkit
