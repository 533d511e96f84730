#pragma once

#include <qspectra/algebra/presentation.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace qspectra {

/// Simply laced Dynkin type with rank, e.g. A_3, D_5, E_8.
struct AdeType {
  char family = 'A';
  int rank = 1;

  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const AdeType&, const AdeType&) = default;
};

inline void require_supported(const AdeType& t) {
  const bool ok = (t.family == 'A' && t.rank >= 1) || (t.family == 'D' && t.rank >= 4) ||
                  (t.family == 'E' && t.rank >= 6 && t.rank <= 8);
  if (!ok) throw std::invalid_argument("unsupported ADE type " + t.to_string());
}

/// Parses "A3", "A_3", "D4", "E8".
inline AdeType parse_ade(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("cannot parse ADE type '" + text + "'");
  std::size_t pos = 1;
  if (text[pos] == '_') ++pos;
  if (pos >= text.size()) throw std::invalid_argument("cannot parse ADE type '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("cannot parse ADE type '" + text + "'");
  AdeType t{static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))), std::stoi(text.substr(pos))};
  require_supported(t);
  return t;
}

/// Normal form of the simple singularity of type t in variables x, y.
inline MultiPoly ade_singularity(const AdeType& t) {
  require_supported(t);
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  switch (t.family) {
    case 'A': return x.pow(static_cast<unsigned>(t.rank + 1)) + y * y;
    case 'D': return x.pow(static_cast<unsigned>(t.rank - 1)) + x * y * y;
    default:
      if (t.rank == 6) return x.pow(3) + y.pow(4);
      if (t.rank == 7) return x.pow(3) + x * y.pow(3);
      return x.pow(3) + y.pow(5);
  }
}

inline PolyPresentation jacobi_presentation(const AdeType& t) {
  const MultiPoly f = ade_singularity(t);
  PolyPresentation p;
  p.name = "Jac(" + t.to_string() + ")";
  p.variables = {"x", "y"};
  p.degrees = {1, 1};
  p.relations = {f.derivative(0), f.derivative(1)};
  p.fano_index = 1;
  p.anticanonical = MultiPoly(2);
  p.dim_x = 0;
  return p;
}

/// Milnor algebra Q[x,y]/(df/dx, df/dy). Trivially graded (m = 1) with a zero
/// anticanonical vector: it is a comparison target, not a variety.
inline FiniteCommAlgebra jacobi_ring(const AdeType& t) { return from_presentation(jacobi_presentation(t)); }

}  // namespace qspectra
