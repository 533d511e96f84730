#pragma once

// Schur polynomials in a fixed number of variables, expanded monomially from
// semistandard tableaux. Products are decomposed back into Schur functions by
// peeling off the dominant leading monomial.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, std::int64_t>;

namespace detail {

inline void fill(const std::vector<int>& shape, int vars, std::size_t row, std::size_t col,
                 std::vector<std::vector<int>>& t, Monomial& content, Poly& out) {
  if (row == shape.size()) {
    out[content] += 1;
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    fill(shape, vars, row + 1, 0, t, content, out);
    return;
  }
  int lo = 0;
  if (col > 0) lo = t[row][col - 1];
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (int v = lo; v < vars; ++v) {
    t[row][col] = v;
    ++content[v];
    fill(shape, vars, row, col + 1, t, content, out);
    --content[v];
  }
}

}  // namespace detail

inline Poly schur_poly(const std::vector<int>& shape, int vars) {
  Poly out;
  std::vector<int> parts;
  for (int p : shape)
    if (p > 0) parts.push_back(p);
  if (static_cast<int>(parts.size()) > vars) return out;
  std::vector<std::vector<int>> t;
  for (int p : parts) t.emplace_back(static_cast<std::size_t>(p), 0);
  Monomial content(static_cast<std::size_t>(vars), 0);
  detail::fill(parts, vars, 0, 0, t, content, out);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Schur expansion of a symmetric polynomial: shape (trailing zeros kept) -> coefficient.
inline std::map<std::vector<int>, std::int64_t> schur_expand(Poly p, int vars) {
  std::map<std::vector<int>, std::int64_t> out;
  while (!p.empty()) {
    const auto lead = std::prev(p.end());
    const Monomial shape = lead->first;
    const std::int64_t c = lead->second;
    out[shape] += c;
    for (const auto& [m, v] : schur_poly(shape, vars)) p[m] -= c * v;
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

inline std::map<std::vector<int>, std::int64_t> lr_bruteforce(const std::vector<int>& l, const std::vector<int>& m,
                                                             int vars) {
  return schur_expand(multiply(schur_poly(l, vars), schur_poly(m, vars)), vars);
}

}  // namespace oracle
