#pragma once

#include <qspectra/algebra/finite_algebra.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qspectra {

struct Violation {
  enum class Kind { Commutativity, Associativity, Unit, Grading, Anticanonical };
  Kind kind;
  std::string detail;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Commutativity: return "commutativity";
    case Violation::Kind::Associativity: return "associativity";
    case Violation::Kind::Unit: return "unit";
    case Violation::Kind::Grading: return "grading";
    case Violation::Kind::Anticanonical: return "anticanonical";
  }
  return "?";
}

struct ValidationReport {
  std::string algebra;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(Violation::Kind k) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [k](const Violation& v) { return v.kind == k; }));
  }
};

namespace detail {

using SparseVec = std::map<std::size_t, Rational>;

inline void accumulate(SparseVec& acc, const std::vector<StructureTerm>& terms, const Rational& s) {
  for (const auto& t : terms) {
    Rational& slot = acc[t.k];
    slot += s * t.value;
    if (slot == 0) acc.erase(t.k);
  }
}

}  // namespace detail

/// Checks every structural invariant of A and lists each failure.
inline ValidationReport validate_algebra(const FiniteCommAlgebra& a) {
  ValidationReport report{a.name(), {}};
  const std::size_t n = a.dim();
  auto add = [&](Violation::Kind k, const std::string& msg) { report.violations.push_back({k, msg}); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.product(i, j) != a.product(j, i))
        add(Violation::Kind::Commutativity, "b" + std::to_string(i) + "*b" + std::to_string(j) + " != b" +
                                                std::to_string(j) + "*b" + std::to_string(i));

  // (b_i b_j) b_l == b_i (b_j b_l), using the sparse table directly.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        detail::SparseVec left, right;
        for (const auto& t : a.product(i, j)) detail::accumulate(left, a.product(t.k, l), t.value);
        for (const auto& t : a.product(j, l)) detail::accumulate(right, a.product(i, t.k), t.value);
        if (left != right)
          add(Violation::Kind::Associativity, "(b" + std::to_string(i) + "*b" + std::to_string(j) + ")*b" +
                                                  std::to_string(l) + " != b" + std::to_string(i) + "*(b" +
                                                  std::to_string(j) + "*b" + std::to_string(l) + ")");
      }

  for (std::size_t i = 0; i < n; ++i) {
    const Vector bi = a.basis_vector(i);
    if (a.multiply(a.unit(), bi) != bi || a.multiply(bi, a.unit()) != bi)
      add(Violation::Kind::Unit, "unit * b" + std::to_string(i) + " != b" + std::to_string(i));
  }

  const int m = a.fano_index();
  const auto& deg = a.degrees();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j))
        if (deg[t.k] != (deg[i] + deg[j]) % m)
          add(Violation::Kind::Grading, "b" + std::to_string(i) + "*b" + std::to_string(j) + " has a component on b" +
                                            std::to_string(t.k) + " of the wrong degree");

  for (std::size_t i = 0; i < n; ++i) {
    if (a.anticanonical()[i] != 0 && deg[i] != 1 % m)
      add(Violation::Kind::Anticanonical, "anticanonical class has a component on b" + std::to_string(i) +
                                              " of degree " + std::to_string(deg[i]) + " (expected 1 mod " +
                                              std::to_string(m) + ")");
    if (a.unit()[i] != 0 && deg[i] != 0)
      add(Violation::Kind::Grading, "unit has a component on b" + std::to_string(i) + " of nonzero degree");
  }
  return report;
}

}  // namespace qspectra
