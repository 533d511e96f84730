#pragma once

#include <qspectra/algebra/finite_algebra.hpp>
#include <qspectra/schur/littlewood_richardson.hpp>
#include <qspectra/schur/partition.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qspectra::schur {

struct RimHookResult {
  BoxPartition reduced;
  int sign;    // +1 or -1
  int degree;  // number of n-rim-hooks removed (power of q)
};

/// Reduces sigma_nu (nu with at most k parts) in QH(G(k,n)) at q = 1 to
/// +-q^d sigma_core by stripping n-rim-hooks.
///
/// Works on beta-numbers beta_i = nu_i + k - 1 - i: removing an n-rim-hook
/// lowers one beta-number by n. In the bialternant picture each lowering
/// costs a factor (-1)^(k-1) (the relation x_i^n = (-1)^(k-1) q), and the
/// final reordering of the beta-numbers contributes the sign of the sorting
/// permutation. Coinciding residues mean the class vanishes.
inline std::optional<RimHookResult> rim_hook_reduce(const Partition& nu, int k, int n) {
  if (k <= 0 || k >= n) throw std::invalid_argument("rim_hook_reduce: need 0 < k < n");
  if (nu.length() > static_cast<std::size_t>(k))
    throw std::invalid_argument("rim_hook_reduce: " + nu.to_string() + " has more than k = " + std::to_string(k) +
                                " parts");
  std::vector<int> beta(static_cast<std::size_t>(k));
  int degree = 0;
  for (int i = 0; i < k; ++i) {
    const int b = nu[static_cast<std::size_t>(i)] + k - 1 - i;
    degree += b / n;
    beta[static_cast<std::size_t>(i)] = b % n;
  }
  int inversions = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (beta[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(j)]) return std::nullopt;
      if (beta[static_cast<std::size_t>(i)] < beta[static_cast<std::size_t>(j)]) ++inversions;
    }
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> core(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) core[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (k - 1 - i);
  const int sign_flips = inversions + (k - 1) * degree;
  return RimHookResult{BoxPartition(Partition::from_padded(core), k, n), sign_flips % 2 == 0 ? 1 : -1, degree};
}

using QuantumExpansion = std::map<BoxPartition, std::int64_t>;

/// sigma_lambda * sigma_mu in QH(G(k,n)) at q = 1.
inline QuantumExpansion quantum_product(const BoxPartition& lambda, const BoxPartition& mu) {
  if (lambda.k() != mu.k() || lambda.n() != mu.n())
    throw std::invalid_argument("quantum_product: classes live on different Grassmannians G(" +
                                std::to_string(lambda.k()) + "," + std::to_string(lambda.n()) + ") and G(" +
                                std::to_string(mu.k()) + "," + std::to_string(mu.n()) + ")");
  const int k = lambda.k(), n = lambda.n();
  QuantumExpansion out;
  for (const auto& [nu, c] : lr_coeffs(lambda.partition(), mu.partition(), static_cast<std::size_t>(k))) {
    if (auto r = rim_hook_reduce(nu, k, n)) out[r->reduced] += r->sign * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [p, c] : out)
    if (c < 0)
      throw std::logic_error("negative quantum structure constant for " + lambda.partition().to_string() + " * " +
                             mu.partition().to_string() + " on " + p.partition().to_string());
  return out;
}

inline std::string schubert_label(const Partition& p) { return "s" + p.to_string(); }

/// QH_can(G(k,n)): Schubert basis, Z/n grading by weight, -K = n * sigma_1.
inline FiniteCommAlgebra qh_grassmannian(int k, int n) {
  if (k <= 0 || k >= n)
    throw std::invalid_argument("qh_grassmannian: invalid parameters (" + std::to_string(k) + "," + std::to_string(n) +
                                "), need 0 < k < n");
  const auto basis = box_partitions(k, n);
  const std::size_t dim = basis.size();
  std::map<BoxPartition, std::size_t> index;
  for (std::size_t i = 0; i < dim; ++i) index.emplace(basis[i], i);

  FiniteCommAlgebra::Data d;
  d.name = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
  d.fano_index = n;
  d.dim_x = k * (n - k);
  d.products.resize(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d.basis_labels.push_back(schubert_label(basis[i].partition()));
    d.degrees.push_back(basis[i].weight() % n);
    for (std::size_t j = i; j < dim; ++j) {
      std::vector<StructureTerm> row;
      for (const auto& [p, c] : quantum_product(basis[i], basis[j])) row.push_back({index.at(p), Rational(c)});
      d.products[i * dim + j] = row;
      d.products[j * dim + i] = std::move(row);
    }
  }
  d.unit = unit_vector(dim, index.at(BoxPartition(Partition{}, k, n)));
  d.anticanonical = scale(Rational(n), unit_vector(dim, index.at(BoxPartition(Partition{1}, k, n))));
  return FiniteCommAlgebra(std::move(d));
}

}  // namespace qspectra::schur
