#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "tropsched/scalar.hpp"

namespace tropsched {

/// Dense vector of semifield elements. Whether it plays the role of a column
/// or a row is decided by the operation it is passed to.
template <class Num>
using Vector = std::vector<Scalar<Num>>;

/// Dense row-major matrix of semifield elements. Default entries are bottom.
template <class Num>
class Matrix {
 public:
  using value_type = Scalar<Num>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar<Num>::one();
    return m;
  }

  /// Throws DimensionError on ragged input.
  static Matrix from_rows(const std::vector<Vector<Num>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows.front().size() : 0;
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i].size() != n) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
    }
    return a;
  }

  /// Column vector viewed as an n x 1 matrix.
  static Matrix column(const Vector<Num>& v) {
    Matrix a(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) a(i, 0) = v[i];
    return a;
  }

  /// Row vector viewed as a 1 x n matrix.
  static Matrix row(const Vector<Num>& v) {
    Matrix a(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) a(0, j) = v[j];
    return a;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<value_type> row_span(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const value_type> row_span(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Vector<Num> row_vector(std::size_t i) const {
    auto r = row_span(i);
    return Vector<Num>(r.begin(), r.end());
  }

  Vector<Num> column_vector(std::size_t j) const {
    Vector<Num> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::span<value_type> data() noexcept { return data_; }
  std::span<const value_type> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& a) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      os << (i ? "\n[" : "[");
      for (std::size_t j = 0; j < a.cols_; ++j) os << (j ? " " : "") << a(i, j);
      os << "]";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <class Num>
std::ostream& operator<<(std::ostream& os, const Vector<Num>& v) {
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os << ")";
}

}  // namespace tropsched
