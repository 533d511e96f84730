#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra::schur {

/// Weakly decreasing list of positive integers; the empty list is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive: " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops trailing zeros first; any other violation still throws.
  static Partition from_padded(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
  }

  bool contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.length(); ++i)
      if (other.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partition inside the k x (n-k) box: indexes a Schubert class of G(k,n).
class BoxPartition {
 public:
  BoxPartition(Partition p, int k, int n) : p_(std::move(p)), k_(k), n_(n) {
    if (k <= 0 || k >= n) throw std::invalid_argument("BoxPartition: need 0 < k < n");
    if (p_.length() > static_cast<std::size_t>(k) || p_[0] > n - k)
      throw std::invalid_argument("partition " + p_.to_string() + " does not fit in the " + std::to_string(k) + "x" +
                                  std::to_string(n - k) + " box");
  }

  const Partition& partition() const { return p_; }
  int k() const { return k_; }
  int n() const { return n_; }
  int weight() const { return p_.weight(); }

  /// Complementary partition in the box (Poincare dual class).
  BoxPartition complement() const {
    std::vector<int> c(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) c[static_cast<std::size_t>(i)] = (n_ - k_) - p_[static_cast<std::size_t>(k_ - 1 - i)];
    return {Partition::from_padded(std::move(c)), k_, n_};
  }

  friend auto operator<=>(const BoxPartition&, const BoxPartition&) = default;

 private:
  Partition p_;
  int k_;
  int n_;
};

/// All partitions in the k x (n-k) box, by weight and then reverse-lexicographically.
inline std::vector<BoxPartition> box_partitions(int k, int n) {
  if (k <= 0 || k >= n) throw std::invalid_argument("box_partitions: need 0 < k < n");
  std::vector<Partition> all;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max_part) -> void {
    all.push_back(Partition(cur));
    if (cur.size() == static_cast<std::size_t>(k)) return;
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, n - k);
  std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a > b;
  });
  std::vector<BoxPartition> out;
  out.reserve(all.size());
  for (auto& p : all) out.emplace_back(std::move(p), k, n);
  return out;
}

}  // namespace qspectra::schur
