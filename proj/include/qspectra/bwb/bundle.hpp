#pragma once

#include <qspectra/schur/littlewood_richardson.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qspectra::bwb {

using Weight = std::vector<int>;

inline bool non_increasing(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1]) return false;
  return true;
}

/// Decomposes V_alpha (x) V_beta for GL_r (alpha, beta dominant, possibly
/// negative): shift both to partitions, apply Littlewood-Richardson, shift back.
inline std::map<Weight, std::int64_t> gl_tensor(const Weight& alpha, const Weight& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("gl_tensor: rank mismatch");
  const std::size_t r = alpha.size();
  if (r == 0) return {{Weight{}, 1}};
  const int sa = alpha.back(), sb = beta.back();
  std::vector<int> pa(r), pb(r);
  for (std::size_t i = 0; i < r; ++i) {
    pa[i] = alpha[i] - sa;
    pb[i] = beta[i] - sb;
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& [nu, c] : schur::lr_coeffs(schur::Partition::from_padded(pa), schur::Partition::from_padded(pb), r)) {
    Weight w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = nu[i] + sa + sb;
    out[w] += c;
  }
  return out;
}

inline Weight dual_weight(const Weight& w) {
  Weight d(w.rbegin(), w.rend());
  for (auto& x : d) x = -x;
  return d;
}

/// Formal sum of irreducible homogeneous bundles S^lam U^v (x) S^mu Q^v on
/// G(k,n), with multiplicities. Twists by O(t) = det(U^v)^t are folded into
/// lam, and mu is normalized to end in 0 (det Q^v = O(-1)).
class BundleExpr {
 public:
  using Key = std::pair<Weight, Weight>;

  BundleExpr(int k, int n) : k_(k), n_(n) {
    if (k <= 0 || k >= n) throw std::invalid_argument("BundleExpr: need 0 < k < n");
  }

  static BundleExpr irreducible(int k, int n, Weight lam, Weight mu, std::int64_t mult = 1) {
    BundleExpr e(k, n);
    e.add(std::move(lam), std::move(mu), mult);
    return e;
  }

  static BundleExpr structure_sheaf(int k, int n) {
    return irreducible(k, n, Weight(static_cast<std::size_t>(k), 0), Weight(static_cast<std::size_t>(n - k), 0));
  }

  int k() const { return k_; }
  int n() const { return n_; }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(Weight lam, Weight mu, std::int64_t mult) {
    if (lam.size() != static_cast<std::size_t>(k_) || mu.size() != static_cast<std::size_t>(n_ - k_))
      throw std::invalid_argument("bundle weight lengths do not match G(" + std::to_string(k_) + "," +
                                  std::to_string(n_) + ")");
    if (!non_increasing(lam) || !non_increasing(mu)) throw std::invalid_argument("bundle weights must be non-increasing");
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult == 0) return;
    const int c = mu.empty() ? 0 : mu.back();
    for (auto& x : mu) x -= c;
    for (auto& x : lam) x -= c;
    terms_[{std::move(lam), std::move(mu)}] += mult;
  }

  BundleExpr twist(int t) const {
    BundleExpr e(k_, n_);
    for (const auto& [key, m] : terms_) {
      Weight lam = key.first;
      for (auto& x : lam) x += t;
      e.add(std::move(lam), key.second, m);
    }
    return e;
  }

  BundleExpr dual() const {
    BundleExpr e(k_, n_);
    for (const auto& [key, m] : terms_) e.add(dual_weight(key.first), dual_weight(key.second), m);
    return e;
  }

  friend BundleExpr operator+(const BundleExpr& a, const BundleExpr& b) {
    a.require_same_ambient(b);
    BundleExpr e = a;
    for (const auto& [key, m] : b.terms_) e.add(key.first, key.second, m);
    return e;
  }

  friend BundleExpr tensor(const BundleExpr& a, const BundleExpr& b) {
    a.require_same_ambient(b);
    BundleExpr e(a.k_, a.n_);
    for (const auto& [ka, ma] : a.terms_)
      for (const auto& [kb, mb] : b.terms_)
        for (const auto& [lam, cl] : gl_tensor(ka.first, kb.first))
          for (const auto& [mu, cm] : gl_tensor(ka.second, kb.second)) e.add(lam, mu, ma * mb * cl * cm);
    return e;
  }

  friend bool operator==(const BundleExpr&, const BundleExpr&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, m] : terms_) {
      if (!first) os << " + ";
      first = false;
      if (m != 1) os << m << "*";
      os << "S^" << weight_string(key.first) << " U*";
      bool trivial_mu = true;
      for (int x : key.second) trivial_mu = trivial_mu && x == 0;
      if (!trivial_mu) os << " * S^" << weight_string(key.second) << " Q*";
    }
    return os.str();
  }

  static std::string weight_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
  }

 private:
  void require_same_ambient(const BundleExpr& b) const {
    if (k_ != b.k_ || n_ != b.n_)
      throw std::invalid_argument("bundles live on different Grassmannians G(" + std::to_string(k_) + "," +
                                  std::to_string(n_) + ") and G(" + std::to_string(b.k_) + "," + std::to_string(b.n_) +
                                  ")");
  }

  int k_;
  int n_;
  std::map<Key, std::int64_t> terms_;
};

class BundleParseError : public std::invalid_argument {
 public:
  BundleParseError(const std::string& text, std::size_t pos, const std::string& what)
      : std::invalid_argument("cannot parse bundle '" + text + "' at offset " + std::to_string(pos) + ": " + what) {}
};

namespace detail {

class BundleParser {
 public:
  BundleParser(const std::string& text, int k, int n) : s_(text), k_(k), n_(n) {}

  BundleExpr parse() {
    BundleExpr result = factor();
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() == '(') {
        result = result.twist(twist());
        continue;
      }
      expect('*', "expected '*' (tensor) or a twist '(t)'");
      result = tensor(result, factor());
    }
    return result;
  }

 private:
  BundleExpr factor() {
    skip_ws();
    if (at_end()) fail("expected a bundle");
    BundleExpr e(k_, n_);
    if (peek() == 'O') {
      ++pos_;
      e = BundleExpr::structure_sheaf(k_, n_);
    } else {
      std::vector<int> weight{1};
      if (peek() == 'S') {
        ++pos_;
        expect('^', "expected '^' after 'S'");
        weight = schur_index();
        skip_ws();
      }
      if (at_end()) fail("expected 'U' or 'Q'");
      const char which = s_[pos_];
      if (which != 'U' && which != 'Q') fail("expected 'U' or 'Q'");
      ++pos_;
      const bool dual = !at_end() && peek() == '*';
      if (dual) ++pos_;
      const std::size_t rank = static_cast<std::size_t>(which == 'U' ? k_ : n_ - k_);
      if (weight.size() > rank) fail("Schur index has more entries than the bundle rank " + std::to_string(rank));
      weight.resize(rank, 0);
      if (!non_increasing(weight)) fail("Schur index must be non-increasing");
      if (!dual) weight = dual_weight(weight);
      Weight lam(static_cast<std::size_t>(k_), 0), mu(static_cast<std::size_t>(n_ - k_), 0);
      (which == 'U' ? lam : mu) = weight;
      e = BundleExpr::irreducible(k_, n_, lam, mu);
    }
    skip_ws();
    while (!at_end() && peek() == '(') {
      e = e.twist(twist());
      skip_ws();
    }
    return e;
  }

  std::vector<int> schur_index() {
    skip_ws();
    if (!at_end() && peek() == '(') {
      ++pos_;
      std::vector<int> w{integer()};
      skip_ws();
      while (!at_end() && peek() == ',') {
        ++pos_;
        w.push_back(integer());
        skip_ws();
      }
      expect(')', "expected ')' closing the Schur index");
      return w;
    }
    return {integer()};
  }

  int twist() {
    expect('(', "expected '('");
    const int t = integer();
    skip_ws();
    expect(')', "expected ')' closing the twist");
    return t;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void expect(char c, const std::string& what) {
    skip_ws();
    if (at_end() || peek() != c) fail(what);
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw BundleParseError(s_, pos_, what); }

  const std::string& s_;
  int k_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: `O`, `U*`, `Q*`, `S^a U*`, `S^(a,b,..) U*`, `S^(..) Q*`, bare `U`/`Q`
/// for the undualized bundles, tensor products written with `*`, and twists
/// `(t)` after any factor or the whole expression. The dual star must follow
/// U/Q directly; a separated `*` is a tensor product.
inline BundleExpr parse_bundle(const std::string& text, int k, int n) {
  return detail::BundleParser(text, k, n).parse();
}

}  // namespace qspectra::bwb
