#pragma once

#include <qspectra/algebra/finite_algebra.hpp>
#include <qspectra/algebra/presentation.hpp>

#include <stdexcept>
#include <string>

namespace qspectra {

/// QH_can(P^n) = Q[h]/(h^{n+1} - 1), basis 1, h, ..., h^n.
inline FiniteCommAlgebra qh_projective(int n) {
  if (n < 1) throw std::invalid_argument("qh_projective: need n >= 1, got " + std::to_string(n));
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  FiniteCommAlgebra::Data d;
  d.name = "P" + std::to_string(n);
  d.fano_index = n + 1;
  d.dim_x = n;
  d.products.resize(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d.basis_labels.push_back(i == 0 ? "1" : i == 1 ? "h" : "h^" + std::to_string(i));
    d.degrees.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < dim; ++j) d.products[i * dim + j] = {{(i + j) % dim, Rational(1)}};
  }
  d.unit = unit_vector(dim, 0);
  d.anticanonical = scale(Rational(n + 1), unit_vector(dim, 1));
  return FiniteCommAlgebra(std::move(d));
}

inline PolyPresentation projective_presentation(int n) {
  if (n < 1) throw std::invalid_argument("projective_presentation: need n >= 1");
  PolyPresentation p;
  p.name = "P" + std::to_string(n);
  p.variables = {"h"};
  p.degrees = {1};
  p.relations = {MultiPoly::variable(1, 0, n + 1) - MultiPoly::constant(1, 1)};
  p.fano_index = n + 1;
  p.anticanonical = Rational(n + 1) * MultiPoly::variable(1, 0);
  p.dim_x = n;
  return p;
}

/// QH(G(k,n)) at q = 1 in the elementary classes e_i = c_i(U^v) = sigma_{1^i}:
/// h_{n-k+1} = ... = h_{n-1} = 0 and h_n + (-1)^k = 0, where h_j are the
/// complete homogeneous polynomials, sum h_j t^j = 1 / sum (-1)^i e_i t^i.
inline PolyPresentation grassmannian_presentation(int k, int n) {
  if (k <= 0 || k >= n) throw std::invalid_argument("grassmannian_presentation: need 0 < k < n");
  if (k > 3) throw std::invalid_argument("grassmannian_presentation: the Groebner engine handles k <= 3 only");
  const std::size_t nv = static_cast<std::size_t>(k);
  PolyPresentation p;
  p.name = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
  for (int i = 1; i <= k; ++i) {
    p.variables.push_back("e" + std::to_string(i));
    p.degrees.push_back(i);
  }
  std::vector<MultiPoly> h{MultiPoly::constant(nv, 1)};
  for (int j = 1; j <= n; ++j) {
    MultiPoly hj(nv);
    for (int i = 1; i <= std::min(j, k); ++i) {
      const Rational sign = (i % 2 == 1) ? 1 : -1;
      hj = hj + sign * (MultiPoly::variable(nv, static_cast<std::size_t>(i - 1)) * h[static_cast<std::size_t>(j - i)]);
    }
    h.push_back(hj);
  }
  for (int j = n - k + 1; j < n; ++j) p.relations.push_back(h[static_cast<std::size_t>(j)]);
  p.relations.push_back(h[static_cast<std::size_t>(n)] + MultiPoly::constant(nv, k % 2 == 0 ? 1 : -1));
  p.fano_index = n;
  p.anticanonical = Rational(n) * MultiPoly::variable(nv, 0);
  p.dim_x = k * (n - k);
  return p;
}

/// QH_can(IG(2,2n)) in h = c_1(U^v) and c2 = c_2(U^v). The classical relations
/// are the vanishing of c_{2n-2} and c_{2n} of U^perp/U (rank 2n-4), i.e. the
/// degree 2n-2 and 2n parts S_{n-1}, S_n of 1/(1 + 2 c2 + c2^2 - h^2); the
/// quantum correction turns the second into S_n + q h.
inline PolyPresentation ig2_presentation(int n) {
  if (n < 2) throw std::invalid_argument("ig2_presentation: need n >= 2, got " + std::to_string(n));
  const MultiPoly h = MultiPoly::variable(2, 0), c2 = MultiPoly::variable(2, 1);
  const MultiPoly b1 = Rational(2) * c2 - h * h;  // degree 2 part of c(U) c(U^v) - 1
  const MultiPoly b2 = c2 * c2;                   // degree 4 part
  std::vector<MultiPoly> s{MultiPoly::constant(2, 1)};
  for (int j = 1; j <= n; ++j) {
    MultiPoly sj = Rational(-1) * (b1 * s[static_cast<std::size_t>(j - 1)]);
    if (j >= 2) sj = sj - b2 * s[static_cast<std::size_t>(j - 2)];
    s.push_back(sj);
  }
  PolyPresentation p;
  p.name = "IG(2," + std::to_string(2 * n) + ")";
  p.variables = {"h", "c2"};
  p.degrees = {1, 2};
  p.relations = {s[static_cast<std::size_t>(n - 1)], s[static_cast<std::size_t>(n)] + h};
  p.fano_index = 2 * n - 1;
  p.anticanonical = Rational(2 * n - 1) * h;
  p.dim_x = 4 * n - 5;
  return p;
}

inline FiniteCommAlgebra qh_ig2(int n) {
  if (n < 2) throw std::invalid_argument("qh_ig2: need n >= 2, got " + std::to_string(n));
  return from_presentation(ig2_presentation(n));
}

}  // namespace qspectra
