#pragma once

#include <qspectra/exactlin/matrix.hpp>
#include <qspectra/exactlin/poly.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace qspectra {

struct EchelonForm {
  RatMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

inline EchelonForm rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Basis of {v : M v = 0}; one vector per non-pivot column.
inline std::vector<Vector> kernel_basis(const RatMatrix& m) {
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Indices of a maximal linearly independent subset of the given vectors,
/// chosen greedily in order.
inline std::vector<std::size_t> independent_subset(std::size_t length, std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  return rref(RatMatrix::from_columns(length, vectors)).pivots;
}

/// Coordinates of vectors in a fixed basis of a subspace.
class SubspaceCoordinates {
 public:
  SubspaceCoordinates(std::size_t ambient, std::vector<Vector> basis) : basis_(std::move(basis)) {
    const std::size_t d = basis_.size();
    if (d == 0) return;
    const RatMatrix b = RatMatrix::from_columns(ambient, basis_);
    rows_ = rref(b.transpose()).pivots;
    if (rows_.size() != d) throw std::invalid_argument("SubspaceCoordinates: basis is linearly dependent");
    RatMatrix square(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) square(i, j) = b(rows_[i], j);
      square(i, d + i) = 1;
    }
    const EchelonForm e = rref(square);
    inverse_ = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) inverse_(i, j) = e.reduced(i, d + j);
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  /// Coordinates of v, or nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    const std::size_t d = basis_.size();
    Vector restricted(d);
    for (std::size_t i = 0; i < d; ++i) restricted[i] = v[rows_[i]];
    Vector c = d == 0 ? Vector{} : inverse_ * restricted;
    Vector back = zero_vector(v.size());
    for (std::size_t j = 0; j < d; ++j)
      if (c[j] != 0) back = add(back, scale(c[j], basis_[j]));
    if (back != v) return std::nullopt;
    return c;
  }

 private:
  std::vector<Vector> basis_;
  std::vector<std::size_t> rows_;
  RatMatrix inverse_;
};

/// det(xI - M), via reduction to upper Hessenberg form over Q.
inline RatPoly charpoly(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("charpoly: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j) == 0) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      h.swap_rows(p, j + 1);
      h.swap_cols(p, j + 1);
    }
    const Rational pivot = h(j + 1, j);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j) == 0) continue;
      const Rational u = h(r, j) / pivot;
      for (std::size_t c = 0; c < n; ++c)
        if (h(j + 1, c) != 0) h(r, c) -= u * h(j + 1, c);
      for (std::size_t c = 0; c < n; ++c)
        if (h(c, r) != 0) h(c, j + 1) += u * h(c, r);
    }
  }
  // p[i] = charpoly of the leading i x i block.
  std::vector<RatPoly> p(n + 1);
  p[0] = RatPoly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = RatPoly({-h(k - 1, k - 1), 1}) * p[k - 1];
    Rational prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod == 0) break;
      p[k] = p[k] - (prod * h(i, k - 1)) * p[i];
    }
  }
  return p[n];
}

}  // namespace qspectra
