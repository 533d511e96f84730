#pragma once

#include <qspectra/schur/partition.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace qspectra::schur {

using LRExpansion = std::map<Partition, std::int64_t>;

namespace detail {

// Enumerates LR tableaux of shape nu/lambda and content mu by adding one
// horizontal strip per letter and pruning on the lattice-word condition.
class LRTableauEnumerator {
 public:
  LRTableauEnumerator(const Partition& lambda, const Partition& mu, std::size_t max_rows)
      : mu_(mu.parts()), max_rows_(max_rows), shape_(lambda.parts()) {
    counts_.assign(shape_.size() + mu_.size() + 1, std::vector<int>(mu_.size() + 1, 0));
  }

  LRExpansion run() {
    if (shape_.size() > max_rows_) return {};
    place_letter(1);
    return std::move(result_);
  }

 private:
  void place_letter(std::size_t letter) {
    if (letter > mu_.size()) {
      ++result_[Partition::from_padded(shape_)];
      return;
    }
    old_shape_stack_.push_back(shape_);
    add_strip(letter, 0, mu_[letter - 1]);
    old_shape_stack_.pop_back();
  }

  void add_strip(std::size_t letter, std::size_t row, int remaining) {
    const std::vector<int>& old = old_shape_stack_.back();
    if (remaining == 0) {
      if (lattice_ok(letter)) place_letter(letter + 1);
      return;
    }
    if (row >= max_rows_ || row > old.size()) return;
    const int current = row < old.size() ? old[row] : 0;
    const int bound = row == 0 ? current + remaining : old[row - 1];
    const int room = std::min(remaining, bound - current);
    for (int add = room; add >= 0; --add) {
      if (add > 0) {
        if (row == shape_.size()) shape_.push_back(0);
        shape_[row] = current + add;
        counts_[row][letter] = add;
      }
      add_strip(letter, row + 1, remaining - add);
      if (add > 0) {
        counts_[row][letter] = 0;
        shape_[row] = current;
        if (current == 0) shape_.pop_back();
      }
    }
  }

  // Reading rows top to bottom, right to left: after the letters `letter`
  // of row r, their running count must not exceed that of letter-1 in rows < r.
  bool lattice_ok(std::size_t letter) const {
    if (letter == 1) return true;
    int cum_this = 0, cum_prev = 0;
    for (std::size_t r = 0; r < counts_.size(); ++r) {
      cum_this += counts_[r][letter];
      if (cum_this > cum_prev) return false;
      cum_prev += counts_[r][letter - 1];
    }
    return true;
  }

  std::vector<int> mu_;
  std::size_t max_rows_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> old_shape_stack_;
  std::vector<std::vector<int>> counts_;
  LRExpansion result_;
};

}  // namespace detail

/// Littlewood-Richardson coefficients c^nu_{lambda mu} (nonzero ones only),
/// optionally restricted to nu with at most max_rows parts.
inline LRExpansion lr_coeffs(const Partition& lambda, const Partition& mu,
                             std::size_t max_rows = std::numeric_limits<std::size_t>::max()) {
  return detail::LRTableauEnumerator(lambda, mu, max_rows).run();
}

}  // namespace qspectra::schur
