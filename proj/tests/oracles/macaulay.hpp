#pragma once

// Dimension of Q[x,y]/(f_x, f_y) for a quasi-homogeneous f, degree by degree:
// in each weighted degree, count monomials minus the rank of the multiples of
// the partials landing there.

#include <qspectra/exactlin/linalg.hpp>

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Bivariate = std::map<std::pair<int, int>, qspectra::Rational>;

struct WeightedPoly {
  int wx;
  int wy;
  Bivariate terms;
};

inline std::vector<std::pair<int, int>> monomials_of_degree(int wx, int wy, int d) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a * wx <= d; ++a)
    if ((d - a * wx) % wy == 0) out.push_back({a, (d - a * wx) / wy});
  return out;
}

/// Quotient dimension in each weighted degree 0..max_degree.
inline std::vector<std::size_t> jacobi_hilbert_series(const WeightedPoly& f, int max_degree) {
  Bivariate fx, fy;
  for (const auto& [m, c] : f.terms) {
    if (m.first > 0) fx[{m.first - 1, m.second}] += c * m.first;
    if (m.second > 0) fy[{m.first, m.second - 1}] += c * m.second;
  }
  int dx = 0, dy = 0;
  for (const auto& [m, c] : f.terms) {
    dx = (m.first - 1) * f.wx + m.second * f.wy;
    dy = m.first * f.wx + (m.second - 1) * f.wy;
    break;
  }
  std::vector<std::size_t> series;
  for (int d = 0; d <= max_degree; ++d) {
    const auto monos = monomials_of_degree(f.wx, f.wy, d);
    std::map<std::pair<int, int>, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
    std::vector<qspectra::Vector> rows;
    auto add_multiples = [&](const Bivariate& g, int dg) {
      if (d < dg) return;
      for (const auto& [a, b] : monomials_of_degree(f.wx, f.wy, d - dg)) {
        qspectra::Vector r(monos.size(), qspectra::Rational(0));
        for (const auto& [m, c] : g) r[col.at({m.first + a, m.second + b})] += c;
        rows.push_back(r);
      }
    };
    add_multiples(fx, dx);
    add_multiples(fy, dy);
    std::size_t rank = 0;
    if (!rows.empty() && !monos.empty()) {
      qspectra::RatMatrix m(rows.size(), monos.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = rows[i][j];
      rank = qspectra::rank(m);
    }
    series.push_back(monos.size() - rank);
  }
  return series;
}

}  // namespace oracle
