#pragma once

#include <qspectra/algebra/finite_algebra.hpp>
#include <qspectra/algebra/groebner.hpp>
#include <qspectra/algebra/multipoly.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra {

/// Q[vars] / (relations), with positive variable degrees. The degrees drive
/// both the monomial order and the Z/m grading of the resulting algebra.
struct PolyPresentation {
  std::string name;
  std::vector<std::string> variables;
  std::vector<int> degrees;
  std::vector<MultiPoly> relations;
  int fano_index = 1;
  MultiPoly anticanonical;  // as a polynomial in the variables
  int dim_x = 0;

  std::size_t nvars() const { return variables.size(); }
};

/// Algebra structure of a zero-dimensional presentation: Buchberger over a
/// weighted graded-lex order, standard monomials as basis, structure
/// constants from normal forms.
inline FiniteCommAlgebra from_presentation(const PolyPresentation& p) {
  const std::size_t nv = p.nvars();
  if (nv == 0 || nv > 3) throw std::invalid_argument(p.name + ": presentations need 1 to 3 variables");
  if (p.degrees.size() != nv) throw std::invalid_argument(p.name + ": one degree per variable required");
  for (const auto& r : p.relations)
    if (r.nvars() != nv) throw std::invalid_argument(p.name + ": relation in the wrong number of variables");

  const MonomialOrder order(p.degrees);
  const std::vector<MultiPoly> gb = groebner::buchberger(p.relations, order);
  const std::vector<Exponents> basis = groebner::standard_monomials(gb, order, nv);
  if (basis.empty()) throw std::invalid_argument(p.name + ": relations generate the unit ideal");

  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t dim = basis.size();

  auto coordinates = [&](const MultiPoly& poly) {
    Vector v = zero_vector(dim);
    const MultiPoly nf = groebner::normal_form(poly, gb, order);
    for (const auto& [e, c] : nf.terms()) v[index.at(e)] = c;
    return v;
  };

  FiniteCommAlgebra::Data d;
  d.name = p.name;
  d.fano_index = p.fano_index;
  d.dim_x = p.dim_x;
  d.products.resize(dim * dim);
  std::map<Exponents, std::vector<StructureTerm>> cache;
  for (std::size_t i = 0; i < dim; ++i) {
    d.basis_labels.push_back(MultiPoly::monomial_string(basis[i], p.variables));
    d.degrees.push_back(order.degree(basis[i]) % p.fano_index);
    for (std::size_t j = i; j < dim; ++j) {
      Exponents e(nv);
      for (std::size_t v = 0; v < nv; ++v) e[v] = basis[i][v] + basis[j][v];
      auto it = cache.find(e);
      if (it == cache.end()) {
        std::vector<StructureTerm> row;
        const Vector c = coordinates(MultiPoly::monomial(e));
        for (std::size_t k = 0; k < dim; ++k)
          if (c[k] != 0) row.push_back({k, c[k]});
        it = cache.emplace(e, std::move(row)).first;
      }
      d.products[i * dim + j] = it->second;
      d.products[j * dim + i] = it->second;
    }
  }
  d.unit = coordinates(MultiPoly::constant(nv, 1));
  d.anticanonical = p.anticanonical.is_zero() ? zero_vector(dim) : coordinates(p.anticanonical);
  return FiniteCommAlgebra(std::move(d));
}

}  // namespace qspectra
