#pragma once

#include <qspectra/spectrum/report.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra::lefschetz {

/// Lefschetz collection (E_bullet, sigma) with respect to O(1): block i is
/// E_1(i), ..., E_{sigma_i}(i). The support partition is stored padded with
/// zeros to length m, so the rectangular part is always m * sigma_{m-1}.
class LefschetzCollection {
 public:
  LefschetzCollection(std::string variety, std::vector<std::string> starting_block, std::vector<int> support,
                      int fano_index, bool asserted_full = false)
      : variety_(std::move(variety)),
        block_(std::move(starting_block)),
        sigma_(std::move(support)),
        m_(fano_index),
        asserted_full_(asserted_full) {
    if (m_ < 1) throw std::invalid_argument("Fano index must be positive");
    if (sigma_.size() > static_cast<std::size_t>(m_))
      throw std::invalid_argument("support partition has " + std::to_string(sigma_.size()) +
                                  " entries, more than the Fano index " + std::to_string(m_));
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
      if (sigma_[i] < 0) throw std::invalid_argument("support partition has a negative entry");
      if (i > 0 && sigma_[i] > sigma_[i - 1]) throw std::invalid_argument("support partition not non-increasing");
      if (static_cast<std::size_t>(sigma_[i]) > block_.size())
        throw std::invalid_argument("support partition entry " + std::to_string(sigma_[i]) +
                                    " exceeds the starting block length " + std::to_string(block_.size()));
    }
    sigma_.resize(static_cast<std::size_t>(m_), 0);
  }

  const std::string& variety() const { return variety_; }
  const std::vector<std::string>& starting_block() const { return block_; }
  const std::vector<int>& support() const { return sigma_; }
  int fano_index() const { return m_; }
  bool asserted_full() const { return asserted_full_; }

  bool rectangular() const { return sigma_.front() == sigma_.back(); }

  /// (object index in the starting block, twist) in Lefschetz order.
  std::vector<std::pair<std::size_t, int>> objects() const {
    std::vector<std::pair<std::size_t, int>> out;
    for (int t = 0; t < m_; ++t)
      for (int i = 0; i < sigma_[static_cast<std::size_t>(t)]; ++i) out.emplace_back(static_cast<std::size_t>(i), t);
    return out;
  }

 private:
  std::string variety_;
  std::vector<std::string> block_;
  std::vector<int> sigma_;
  int m_;
  bool asserted_full_;
};

struct Lengths {
  int total = 0;
  int rectangular = 0;
  int residual_expected = 0;
};

inline Lengths lengths(const LefschetzCollection& c) {
  Lengths l;
  const auto& s = c.support();
  l.total = std::accumulate(s.begin(), s.end(), 0);
  l.rectangular = c.fano_index() * s.back();
  l.residual_expected = l.total - l.rectangular;
  return l;
}

struct Check {
  std::string name;
  bool applicable = true;
  bool passed = false;
  std::string explanation;
};

struct NumerologyVerdict {
  int total_length = 0;
  int rect_length = 0;
  int residual_expected = 0;
  Rational k_required;
  std::vector<Check> checks;

  /// Every applicable check passes.
  bool all_passed() const {
    for (const auto& c : checks)
      if (c.applicable && !c.passed) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Compares the shape of a collection with the spectrum: the rectangular part
/// against QS^x (k = length / m) and the residual part against QS^o.
inline NumerologyVerdict conjecture_numerology(const spectrum::SpectrumReport& r, const LefschetzCollection& c) {
  if (r.fano_index != c.fano_index())
    throw std::invalid_argument("Fano index mismatch: spectrum of " + r.algebra + " has m = " +
                                std::to_string(r.fano_index) + ", collection has m = " + std::to_string(c.fano_index()));
  const Lengths l = lengths(c);
  NumerologyVerdict v;
  v.total_length = l.total;
  v.rect_length = l.rectangular;
  v.residual_expected = l.residual_expected;
  v.k_required = r.orbits.k_len;

  const int dim = static_cast<int>(r.dim_total);
  v.checks.push_back({"total_length", true, l.total == dim,
                      "length " + std::to_string(l.total) + " vs dim H* = " + std::to_string(dim) +
                          (c.asserted_full() ? " (collection is known to be full)" : " (fullness not claimed)")});

  const int sigma_last = c.support().back();
  std::string k_text = r.orbits.k_len.get_str();
  v.checks.push_back({"rectangular_part", true, r.orbits.k_len_integral && Rational(sigma_last) == r.orbits.k_len,
                      "sigma_{m-1} = " + std::to_string(sigma_last) + " vs k = length(QS^x)/m = " + k_text});

  v.checks.push_back({"residual_part", true, l.residual_expected == static_cast<int>(r.dim_zero_part),
                      "residual length " + std::to_string(l.residual_expected) + " vs length(QS^o) = " +
                          std::to_string(r.dim_zero_part)});

  const bool zero_reduced = r.zero_part.dim > 0 && r.zero_part.geometric_points == r.zero_part.dim;
  v.checks.push_back({"residual_points", zero_reduced,
                      zero_reduced && l.residual_expected == static_cast<int>(r.zero_part.geometric_points),
                      zero_reduced ? "QS^o is reduced with " + std::to_string(r.zero_part.geometric_points) +
                                         " points: one completely orthogonal exceptional object per point expected"
                                   : "QS^o empty or non-reduced: count comparison not applicable"});
  return v;
}

/// Builtin collections: beilinson(n), kapranov_g24, minimal_g24, kuznetsov_ig2(n).
inline LefschetzCollection builtin_collection(const std::string& name, int param = 0) {
  if (name == "beilinson") {
    if (param < 1) throw std::invalid_argument("beilinson(n) needs n >= 1");
    return {"P" + std::to_string(param), {"O"}, std::vector<int>(static_cast<std::size_t>(param) + 1, 1), param + 1,
            true};
  }
  if (name == "kapranov_g24") return {"G(2,4)", {"O", "U*", "S^2 U*"}, {3, 2, 1}, 4, true};
  if (name == "minimal_g24") return {"G(2,4)", {"O", "U*"}, {2, 2, 1, 1}, 4, true};
  if (name == "kuznetsov_ig2") {
    if (param < 2) throw std::invalid_argument("kuznetsov_ig2(n) needs n >= 2");
    std::vector<std::string> block{"O", "U*"};
    for (int i = 2; i < param; ++i) block.push_back("S^" + std::to_string(i) + " U*");
    std::vector<int> sigma(static_cast<std::size_t>(param - 1), param);
    sigma.insert(sigma.end(), static_cast<std::size_t>(param), param - 1);
    return {"IG(2," + std::to_string(2 * param) + ")", block, sigma, 2 * param - 1, true};
  }
  throw std::invalid_argument("unknown builtin collection '" + name + "'");
}

}  // namespace qspectra::lefschetz
