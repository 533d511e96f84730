#pragma once

#include <qspectra/algebra/multipoly.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qspectra {

/// Weighted graded lexicographic order: compare weighted degree first,
/// then exponents lexicographically (variable 0 largest).
class MonomialOrder {
 public:
  explicit MonomialOrder(std::vector<int> weights) : weights_(std::move(weights)) {
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("MonomialOrder: weights must be positive");
  }

  int degree(const Exponents& e) const { return std::inner_product(e.begin(), e.end(), weights_.begin(), 0); }

  bool less(const Exponents& a, const Exponents& b) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
  }

  const std::vector<int>& weights() const { return weights_; }

 private:
  std::vector<int> weights_;
};

class NotZeroDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace groebner {

inline std::pair<Exponents, Rational> leading_term(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiPoly make_monic(const MultiPoly& p, const MonomialOrder& order) {
  return (Rational(1) / leading_term(p, order).second) * p;
}

/// Fully reduced normal form of p modulo the polynomials in g.
inline MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& g, const MonomialOrder& order) {
  std::vector<std::pair<Exponents, Rational>> leads;
  leads.reserve(g.size());
  for (const auto& q : g) leads.push_back(leading_term(q, order));
  MultiPoly remainder(p.nvars());
  while (!p.is_zero()) {
    auto [lm, lc] = leading_term(p, order);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!divides(leads[i].first, lm)) continue;
      Exponents shift(lm.size());
      for (std::size_t v = 0; v < lm.size(); ++v) shift[v] = lm[v] - leads[i].first[v];
      p = p - MultiPoly::monomial(shift, lc / leads[i].second) * g[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  auto [lf, cf] = leading_term(f, order);
  auto [lg, cg] = leading_term(g, order);
  Exponents lcm(lf.size()), sf(lf.size()), sg(lf.size());
  for (std::size_t i = 0; i < lf.size(); ++i) {
    lcm[i] = std::max(lf[i], lg[i]);
    sf[i] = lcm[i] - lf[i];
    sg[i] = lcm[i] - lg[i];
  }
  return MultiPoly::monomial(sf, Rational(1) / cf) * f - MultiPoly::monomial(sg, Rational(1) / cg) * g;
}

/// Reduced Groebner basis (Buchberger with the coprime-leading-monomial criterion).
inline std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators, const MonomialOrder& order) {
  std::vector<MultiPoly> g;
  for (const auto& p : generators)
    if (!p.is_zero()) g.push_back(make_monic(p, order));
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Exponents li = leading_term(g[i], order).first, lj = leading_term(g[j], order).first;
    bool coprime = true;
    for (std::size_t v = 0; v < li.size(); ++v)
      if (li[v] > 0 && lj[v] > 0) coprime = false;
    if (coprime) continue;
    MultiPoly r = normal_form(s_polynomial(g[i], g[j], order), g, order);
    if (r.is_zero()) continue;
    g.push_back(make_monic(r, order));
    for (std::size_t t = 0; t + 1 < g.size(); ++t) pairs.emplace_back(t, g.size() - 1);
  }
  // Minimalize, then inter-reduce.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Exponents li = leading_term(g[i], order).first;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents lj = leading_term(g[j], order).first;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto [lm, lc] = leading_term(minimal[i], order);
    MultiPoly tail = minimal[i];
    tail.add_term(lm, -lc);
    MultiPoly r = normal_form(tail, others, order);
    r.add_term(lm, lc);
    reduced.push_back(make_monic(r, order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.less(leading_term(a, order).first, leading_term(b, order).first);
  });
  return reduced;
}

/// Monomials not divisible by any leading monomial of the basis, ascending in
/// the order. Throws NotZeroDimensional when the set is infinite or exceeds `ceiling`.
inline std::vector<Exponents> standard_monomials(const std::vector<MultiPoly>& basis, const MonomialOrder& order,
                                                 std::size_t nvars, std::size_t ceiling = 100000) {
  std::vector<Exponents> leads;
  for (const auto& g : basis) leads.push_back(leading_term(g, order).first);
  std::vector<int> bound(nvars, -1);
  for (const auto& l : leads) {
    int nonzero = 0;
    std::size_t var = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (l[v] > 0) {
        ++nonzero;
        var = v;
      }
    if (nonzero == 0) return {};  // unit ideal
    if (nonzero == 1 && (bound[var] < 0 || l[var] < bound[var])) bound[var] = l[var];
  }
  for (std::size_t v = 0; v < nvars; ++v)
    if (bound[v] < 0)
      throw NotZeroDimensional("ideal is not zero-dimensional: no leading monomial is a pure power of variable " +
                               std::to_string(v));
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nvars) {
      for (const auto& l : leads)
        if (divides(l, e)) return;
      out.push_back(e);
      if (out.size() > ceiling)
        throw NotZeroDimensional("standard monomial count exceeds the ceiling of " + std::to_string(ceiling));
      return;
    }
    for (int x = 0; x < bound[v]; ++x) {
      e[v] = x;
      self(self, v + 1);
    }
    e[v] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) { return order.less(a, b); });
  return out;
}

}  // namespace groebner
}  // namespace qspectra
