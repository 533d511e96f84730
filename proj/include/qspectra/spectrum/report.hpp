#pragma once

#include <qspectra/algebra/jacobi.hpp>
#include <qspectra/algebra/validate.hpp>
#include <qspectra/spectrum/decomposition.hpp>

#include <string>
#include <vector>

namespace qspectra::spectrum {

struct LocalInvariants {
  std::size_t dim = 0;
  std::size_t geometric_points = 0;
  bool is_single_point = false;
  /// dim N^i / N^{i+1} for i = 0, 1, ... with N the nilradical.
  std::vector<std::size_t> hilbert_function;
  std::size_t socle_dim = 0;

  friend bool operator==(const LocalInvariants&, const LocalInvariants&) = default;
};

inline LocalInvariants local_invariants(const FiniteCommAlgebra& a) {
  LocalInvariants inv;
  inv.dim = a.dim();
  if (a.dim() == 0) return inv;
  const std::size_t n = a.dim();
  const std::vector<Vector> nil = nilradical(a);
  inv.geometric_points = n - nil.size();
  inv.is_single_point = inv.geometric_points == 1;

  std::size_t previous = n;
  std::vector<Vector> power = nil;
  while (true) {
    inv.hilbert_function.push_back(previous - power.size());
    if (power.empty()) break;
    previous = power.size();
    std::vector<Vector> products;
    for (const auto& x : nil)
      for (const auto& y : power) products.push_back(a.multiply(x, y));
    std::vector<Vector> next;
    for (auto idx : independent_subset(n, products)) next.push_back(products[idx]);
    power = std::move(next);
  }
  while (!inv.hilbert_function.empty() && inv.hilbert_function.back() == 0) inv.hilbert_function.pop_back();

  if (nil.empty()) {
    inv.socle_dim = n;
  } else {
    RatMatrix stacked(n * nil.size(), n);
    for (std::size_t b = 0; b < nil.size(); ++b) {
      const RatMatrix m = mult_matrix(a, nil[b]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = m(i, j);
    }
    inv.socle_dim = kernel_basis(stacked).size();
  }
  return inv;
}

struct OrbitAnalysis {
  Rational k_len;
  bool k_len_integral = false;
  Rational k_pts;
  bool k_pts_integral = false;
  /// The kappa-charpoly only has terms in degrees = deg (mod m): its roots are
  /// stable under multiplication by m-th roots of unity.
  bool rotation_ok = false;
  RatPoly kappa_charpoly;
};

inline bool rotation_invariant(const RatPoly& p, int m) {
  const int d = p.degree();
  for (int i = 0; i <= d; ++i)
    if (p.coeff(static_cast<std::size_t>(i)) != 0 && (d - i) % m != 0) return false;
  return true;
}

inline OrbitAnalysis orbit_analysis(const FiniteCommAlgebra& nonzero, int m) {
  if (m <= 0) throw std::invalid_argument("orbit_analysis: Fano index must be positive, got " + std::to_string(m));
  OrbitAnalysis o;
  o.k_len = Rational(static_cast<long>(nonzero.dim()), m);
  o.k_len.canonicalize();
  o.k_len_integral = o.k_len.get_den() == 1;
  o.k_pts = Rational(static_cast<long>(point_count(nonzero)), m);
  o.k_pts.canonicalize();
  o.k_pts_integral = o.k_pts.get_den() == 1;
  o.kappa_charpoly = charpoly(mult_matrix(nonzero, nonzero.anticanonical()));
  o.rotation_ok = rotation_invariant(o.kappa_charpoly, m);
  return o;
}

struct JacobiComparison {
  std::string target;
  LocalInvariants ours;
  LocalInvariants theirs;
  bool dim_match = false;
  bool points_match = false;
  bool hilbert_match = false;
  bool socle_match = false;

  bool full_match() const { return dim_match && points_match && hilbert_match && socle_match; }
};

/// Invariant-level comparison (not an isomorphism test).
inline JacobiComparison compare_with_jacobi(const FiniteCommAlgebra& zero_part, const AdeType& t) {
  JacobiComparison c;
  c.target = "Jac(" + t.to_string() + ")";
  c.ours = local_invariants(zero_part);
  c.theirs = local_invariants(jacobi_ring(t));
  c.dim_match = c.ours.dim == c.theirs.dim;
  c.points_match = c.ours.geometric_points == c.theirs.geometric_points;
  c.hilbert_match = c.ours.hilbert_function == c.theirs.hilbert_function;
  c.socle_match = c.ours.socle_dim == c.theirs.socle_dim;
  return c;
}

/// The quantum spectrum of A, split along kappa. Points are counted as
/// kappa-eigenvalues (multiplication by -K); the P^n convention of reading
/// h-eigenvalues differs by the scalar m, which changes none of the counts.
struct SpectrumReport {
  std::string algebra;
  std::size_t dim_total = 0;
  int fano_index = 1;
  int dim_x = 0;
  RatPoly kappa_charpoly;
  RatPoly kappa_minpoly;
  std::size_t dim_zero_part = 0;
  std::size_t dim_nonzero_part = 0;
  std::size_t nilradical_dim = 0;
  bool semisimple = false;
  bool nonzero_semisimple = false;
  std::size_t nonzero_point_count = 0;
  OrbitAnalysis orbits;
  LocalInvariants zero_part;
  /// Internal invariant violations (empty for a healthy run).
  std::vector<std::string> inconsistencies;

  bool consistent() const { return inconsistencies.empty(); }
};

inline SpectrumReport quantum_spectrum_report(const FiniteCommAlgebra& a) {
  SpectrumReport r;
  r.algebra = a.name();
  r.dim_total = a.dim();
  r.fano_index = a.fano_index();
  r.dim_x = a.dim_x();
  auto fail = [&](const std::string& msg) { r.inconsistencies.push_back(msg); };

  const ValidationReport v = validate_algebra(a);
  for (const auto& violation : v.violations) fail(std::string(to_string(violation.kind)) + ": " + violation.detail);

  r.kappa_charpoly = charpoly(mult_matrix(a, a.anticanonical()));
  const KappaSplit split = kappa_split(a);
  r.kappa_minpoly = split.minimal_polynomial;
  r.dim_zero_part = split.zero.dim();
  r.dim_nonzero_part = split.nonzero.dim();
  r.nilradical_dim = nilradical(a).size();
  r.semisimple = r.nilradical_dim == 0;
  r.nonzero_point_count = point_count(split.nonzero);
  r.nonzero_semisimple = r.nonzero_point_count == split.nonzero.dim();
  r.orbits = orbit_analysis(split.nonzero, a.fano_index());
  r.zero_part = local_invariants(split.zero);

  if (r.dim_zero_part + r.dim_nonzero_part != r.dim_total) fail("kappa split dimensions do not add up");
  if (a.multiply(split.idempotent, split.idempotent) != split.idempotent) fail("e0 is not idempotent");
  if (a.dim() > 0 && split_at_zero(r.kappa_charpoly).a != r.dim_zero_part)
    fail("x-adic valuation of the kappa charpoly differs from dim of the kappa = 0 part");
  std::size_t hilbert_sum = 0;
  for (auto h : r.zero_part.hilbert_function) hilbert_sum += h;
  if (hilbert_sum != r.dim_zero_part) fail("Hilbert function does not sum to the length of the kappa = 0 part");
  if (r.zero_part.geometric_points + r.nonzero_point_count != r.dim_total - r.nilradical_dim)
    fail("point counts are not additive over the kappa split");
  if (split.zero.dim() > 0) {
    const RatPoly zero_min = minimal_polynomial(split.zero, split.zero.anticanonical());
    if (zero_min != RatPoly::monomial(static_cast<std::size_t>(zero_min.degree())))
      fail("kappa is not nilpotent on the kappa = 0 part");
  }
  if (split.nonzero.dim() > 0 && r.orbits.kappa_charpoly.coeff(0) == 0)
    fail("kappa is not invertible on the kappa != 0 part");
  if (v.ok() && !r.orbits.rotation_ok) fail("graded algebra whose kappa-spectrum is not mu_m-invariant");
  return r;
}

}  // namespace qspectra::spectrum
