#pragma once

#include <qspectra/algebra/finite_algebra.hpp>
#include <qspectra/exactlin/linalg.hpp>
#include <qspectra/exactlin/poly.hpp>

#include <string>
#include <vector>

namespace qspectra::spectrum {

/// p(v) evaluated inside the algebra.
inline Vector evaluate(const FiniteCommAlgebra& a, const RatPoly& p, const Vector& v) {
  Vector acc = zero_vector(a.dim());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(a.multiply(acc, v), scale(*it, a.unit()));
  return acc;
}

/// Minimal polynomial of the element v (equivalently of its multiplication
/// operator): the first linear relation among 1, v, v^2, ...
inline RatPoly minimal_polynomial(const FiniteCommAlgebra& a, const Vector& v) {
  a.require_length(v);
  if (a.dim() == 0) return RatPoly::constant(1);
  std::vector<Vector> powers{a.unit()};
  while (true) {
    powers.push_back(a.multiply(powers.back(), v));
    const RatMatrix m = RatMatrix::from_columns(a.dim(), powers);
    const auto kernel = kernel_basis(m);
    if (!kernel.empty()) return RatPoly(kernel.front()).monic();
  }
}

/// The ideal e*A for an idempotent e, as an algebra with unit e. The basis is
/// chosen among the products e*b_i, degree by degree, so it stays homogeneous
/// whenever e has degree 0.
inline FiniteCommAlgebra idempotent_subalgebra(const FiniteCommAlgebra& a, const Vector& e, const std::string& name) {
  const std::size_t n = a.dim();
  const int m = a.fano_index();
  std::vector<Vector> basis;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int r = 0; r < m; ++r) {
    std::vector<Vector> candidates;
    std::vector<std::size_t> source;
    for (std::size_t i = 0; i < n; ++i)
      if (a.degrees()[i] == r) {
        candidates.push_back(a.multiply(e, a.basis_vector(i)));
        source.push_back(i);
      }
    for (auto idx : independent_subset(n, candidates)) {
      basis.push_back(candidates[idx]);
      labels.push_back("e*" + a.basis_labels()[source[idx]]);
      degrees.push_back(r);
    }
  }
  const SubspaceCoordinates coords(n, basis);
  auto in_basis = [&](const Vector& v) {
    auto c = coords.coordinates(v);
    if (!c) throw std::logic_error(name + ": product left the ideal e*A");
    return *c;
  };
  const std::size_t d = basis.size();
  FiniteCommAlgebra::Data data;
  data.name = name;
  data.basis_labels = std::move(labels);
  data.degrees = std::move(degrees);
  data.fano_index = m;
  data.dim_x = a.dim_x();
  data.products.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const Vector c = in_basis(a.multiply(basis[i], basis[j]));
      std::vector<StructureTerm> row;
      for (std::size_t k = 0; k < d; ++k)
        if (c[k] != 0) row.push_back({k, c[k]});
      data.products[i * d + j] = row;
      data.products[j * d + i] = std::move(row);
    }
  data.unit = d == 0 ? Vector{} : in_basis(e);
  data.anticanonical = d == 0 ? Vector{} : in_basis(a.multiply(e, a.anticanonical()));
  return FiniteCommAlgebra(std::move(data));
}

struct KappaSplit {
  RatPoly minimal_polynomial;  // of the anticanonical class
  Vector idempotent;           // e0, the unit of the kappa = 0 part
  FiniteCommAlgebra zero;      // e0 * A
  FiniteCommAlgebra nonzero;   // (1 - e0) * A
};

/// Splits A = A_zero x A_nonzero along the fiber kappa = 0. With the minimal
/// polynomial of kappa written x^b g(x), g(0) != 0, and u x^b + v g = 1, the
/// element e0 = v(kappa) g(kappa) is 1 on the generalized 0-eigenspace and 0
/// elsewhere.
inline KappaSplit kappa_split(const FiniteCommAlgebra& a) {
  const Vector& kappa = a.anticanonical();
  RatPoly pmin = minimal_polynomial(a, kappa);
  Vector e0 = zero_vector(a.dim());
  if (a.dim() > 0) {
    const auto [b, g] = split_at_zero(pmin);
    if (b > 0 && g.degree() == 0) {
      e0 = a.unit();
    } else if (b > 0) {
      const auto [u, v] = bezout_coprime(RatPoly::monomial(b), g);
      e0 = evaluate(a, v * g, kappa);
    }
  }
  const Vector e1 = sub(a.unit(), e0);
  return {pmin, e0, idempotent_subalgebra(a, e0, a.name() + " [kappa=0]"),
          idempotent_subalgebra(a, e1, a.name() + " [kappa!=0]")};
}

/// Kernel of the trace form (a, b) -> tr(L_{ab}); in characteristic 0 this is
/// the nilradical of a finite-dimensional commutative algebra.
inline std::vector<Vector> nilradical(const FiniteCommAlgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return {};
  Vector traces(n);
  for (std::size_t k = 0; k < n; ++k) traces[k] = a.basis_trace(k);
  RatMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) gram(i, j) += t.value * traces[t.k];
  return kernel_basis(gram);
}

/// Number of geometric points of Spec A: dim A / Nil(A).
inline std::size_t point_count(const FiniteCommAlgebra& a) { return a.dim() - nilradical(a).size(); }

}  // namespace qspectra::spectrum
