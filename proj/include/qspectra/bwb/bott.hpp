#pragma once

#include <qspectra/exactlin/rational.hpp>
#include <qspectra/bwb/bundle.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qspectra::bwb {

using GLWeight = std::vector<int>;

/// Cohomological degree -> dimension; zero entries are never stored.
class CohomologyTable {
 public:
  CohomologyTable() = default;
  CohomologyTable(std::initializer_list<std::pair<const int, Integer>> init) {
    for (const auto& [d, v] : init) add(d, v);
  }

  void add(int degree, const Integer& dim) {
    if (dim == 0) return;
    auto& slot = entries_[degree];
    slot += dim;
    if (slot == 0) entries_.erase(degree);
  }

  Integer operator[](int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? Integer(0) : it->second;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<int, Integer>& entries() const { return entries_; }

  Integer euler_characteristic() const {
    Integer chi = 0;
    for (const auto& [d, v] : entries_) chi += (d % 2 == 0) ? v : Integer(-v);
    return chi;
  }

  CohomologyTable& operator+=(const CohomologyTable& o) {
    for (const auto& [d, v] : o.entries_) add(d, v);
    return *this;
  }

  friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) { return a.entries_ == b.entries_; }

  std::string to_string() const {
    if (entries_.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, v] : entries_) {
      os << (first ? "" : ", ") << "H^" << d << ": " << v.get_str();
      first = false;
    }
    os << "}";
    return os.str();
  }

 private:
  std::map<int, Integer> entries_;
};

/// Dimension of the GL(n) irreducible representation of dominant weight delta.
inline Integer weyl_dimension(const GLWeight& delta) {
  if (!non_increasing(delta)) throw std::invalid_argument("weyl_dimension: weight is not dominant");
  Rational d = 1;
  const int n = static_cast<int>(delta.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= Rational(Integer(delta[i] - delta[j] + j - i), Integer(j - i));
  d.canonicalize();
  if (d.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral result");
  return d.get_num();
}

/// Cohomology of the irreducible bundle on G(k,n) with weight w = (lam | mu),
/// lam the U^v part and mu the Q^v part.
inline CohomologyTable bott(const GLWeight& w, int k, int n) {
  if (k <= 0 || k >= n) throw std::invalid_argument("bott: need 0 < k < n");
  if (w.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("bott: weight has length " + std::to_string(w.size()) + ", expected " +
                                std::to_string(n));
  std::vector<long long> v(w.begin(), w.end());
  for (int i = 0; i < n; ++i) v[i] += n - 1 - i;
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) return {};
      if (v[i] < v[j]) ++inversions;
    }
  std::sort(v.begin(), v.end(), std::greater<>());
  GLWeight delta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) delta[i] = static_cast<int>(v[i] - (n - 1 - i));
  CohomologyTable t;
  t.add(inversions, weyl_dimension(delta));
  return t;
}

inline GLWeight concatenate(const Weight& lam, const Weight& mu) {
  GLWeight w = lam;
  w.insert(w.end(), mu.begin(), mu.end());
  return w;
}

/// Sum of Bott tables over all summands, weighted by multiplicity.
inline CohomologyTable cohomology(const BundleExpr& e) {
  CohomologyTable total;
  for (const auto& [key, m] : e.terms()) {
    const CohomologyTable t = bott(concatenate(key.first, key.second), e.k(), e.n());
    for (const auto& [d, v] : t.entries()) total.add(d, v * m);
  }
  return total;
}

}  // namespace qspectra::bwb
