#pragma once

#include <qspectra/exactlin/linalg.hpp>
#include <qspectra/exactlin/matrix.hpp>
#include <qspectra/exactlin/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qspectra {

/// One nonzero structure constant: b_i * b_j has coefficient `value` on b_k.
struct StructureTerm {
  std::size_t k;
  Rational value;
  friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

/// A finite-dimensional commutative unital Q-algebra given by structure
/// constants in a fixed basis, together with the geometric data of the
/// variety it comes from: a Z/m grading (m = Fano index), the anticanonical
/// class and the dimension of the variety.
///
/// The constructor only checks shapes. Algebraic invariants (associativity,
/// commutativity, unit, grading) are checked by validate_algebra, so that a
/// corrupted table can still be loaded and diagnosed.
class FiniteCommAlgebra {
 public:
  struct Data {
    std::string name;
    std::vector<std::string> basis_labels;
    /// products[i * dim + j] = sparse expansion of b_i * b_j.
    std::vector<std::vector<StructureTerm>> products;
    Vector unit;
    std::vector<int> degrees;
    int fano_index = 1;
    Vector anticanonical;
    int dim_x = 0;
  };

  FiniteCommAlgebra() = default;

  explicit FiniteCommAlgebra(Data d) : d_(std::move(d)) {
    const std::size_t n = d_.basis_labels.size();
    if (d_.products.size() != n * n) throw std::invalid_argument(d_.name + ": structure table size != dim^2");
    if (d_.unit.size() != n) throw std::invalid_argument(d_.name + ": unit vector length != dim");
    if (d_.anticanonical.size() != n) throw std::invalid_argument(d_.name + ": anticanonical vector length != dim");
    if (d_.degrees.size() != n) throw std::invalid_argument(d_.name + ": degree list length != dim");
    if (d_.fano_index < 1) throw std::invalid_argument(d_.name + ": Fano index must be positive");
    for (auto& deg : d_.degrees) deg = ((deg % d_.fano_index) + d_.fano_index) % d_.fano_index;
    for (auto& row : d_.products) {
      std::erase_if(row, [](const StructureTerm& t) { return t.value == 0; });
      for (const auto& t : row)
        if (t.k >= n) throw std::invalid_argument(d_.name + ": structure constant index out of range");
      std::sort(row.begin(), row.end(), [](const StructureTerm& a, const StructureTerm& b) { return a.k < b.k; });
    }
  }

  const std::string& name() const { return d_.name; }
  std::size_t dim() const { return d_.basis_labels.size(); }
  const std::vector<std::string>& basis_labels() const { return d_.basis_labels; }
  const Vector& unit() const { return d_.unit; }
  const std::vector<int>& degrees() const { return d_.degrees; }
  int fano_index() const { return d_.fano_index; }
  const Vector& anticanonical() const { return d_.anticanonical; }
  int dim_x() const { return d_.dim_x; }
  const Data& data() const { return d_; }

  const std::vector<StructureTerm>& product(std::size_t i, std::size_t j) const { return d_.products.at(i * dim() + j); }

  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : product(i, j))
      if (t.k == k) return t.value;
    return 0;
  }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  Vector multiply(const Vector& u, const Vector& v) const {
    require_length(u);
    require_length(v);
    Vector r = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (v[j] == 0) continue;
        const Rational s = u[i] * v[j];
        for (const auto& t : product(i, j)) r[t.k] += s * t.value;
      }
    }
    return r;
  }

  Vector power(const Vector& u, std::size_t e) const {
    Vector result = d_.unit;
    Vector base = u;
    while (e > 0) {
      if (e & 1U) result = multiply(result, base);
      e >>= 1U;
      if (e > 0) base = multiply(base, base);
    }
    return result;
  }

  /// Trace of the multiplication operator b_i * (-).
  Rational basis_trace(std::size_t i) const {
    Rational t = 0;
    for (std::size_t l = 0; l < dim(); ++l) t += structure_constant(i, l, l);
    return t;
  }

  void require_length(const Vector& v) const {
    if (v.size() != dim()) {
      throw std::invalid_argument(d_.name + ": coefficient vector of length " + std::to_string(v.size()) +
                                  " for an algebra of dimension " + std::to_string(dim()));
    }
  }

 private:
  Data d_;
};

/// Matrix of a |-> v * a in the basis of A.
inline RatMatrix mult_matrix(const FiniteCommAlgebra& a, const Vector& v) {
  a.require_length(v);
  const std::size_t n = a.dim();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) m(t.k, j) += v[i] * t.value;
  }
  return m;
}

}  // namespace qspectra
