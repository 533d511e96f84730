#pragma once

#include <qspectra/exactlin/rational.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qspectra {

/// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("RatMatrix: entry count != rows * cols");
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RatMatrix from_columns(std::size_t rows, std::span<const Vector> columns) {
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("RatMatrix::from_columns: length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Rational trace() const {
    if (!square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b);
    RatMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }

  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    a.require_same_shape(b);
    RatMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }

  friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimension mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Rational& x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(l, j);
      }
    return r;
  }

  friend Vector operator*(const RatMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    Vector r(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
    return r;
  }

 private:
  void require_same_shape(const RatMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace qspectra
