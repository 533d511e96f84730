#pragma once

#include <qspectra/exactlin/matrix.hpp>
#include <qspectra/exactlin/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qspectra {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
/// The coefficient list is trimmed so the leading coefficient is nonzero;
/// the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static RatPoly constant(const Rational& a) { return RatPoly(std::vector<Rational>{a}); }
  static RatPoly x() { return RatPoly({0, 1}); }
  static RatPoly monomial(std::size_t degree, const Rational& a = 1) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = a;
    return RatPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  RatPoly monic() const {
    if (is_zero()) throw std::domain_error("monic(): zero polynomial");
    return (Rational(1) / leading()) * (*this);
  }

  RatPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return RatPoly(std::move(d));
  }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  /// Horner evaluation at a square matrix.
  RatMatrix operator()(const RatMatrix& m) const {
    if (!m.square()) throw std::invalid_argument("polynomial evaluated at non-square matrix");
    RatMatrix acc(m.rows(), m.cols());
    const RatMatrix id = RatMatrix::identity(m.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + (*it) * id;
    return acc;
  }

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
  }

  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (Rational(-1) * b); }

  friend RatPoly operator*(const Rational& s, const RatPoly& a) {
    if (s == 0) return {};
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return RatPoly(std::move(r));
  }

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Rational mag = abs(a);
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = (mag == 1);
      if (!unit || i == 0) os << mag.get_str();
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational t = rem[static_cast<std::size_t>(i)] / lead;
    if (t == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * b.coeff(static_cast<std::size_t>(j));
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

/// Monic gcd via the remainder sequence; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

/// p / gcd(p, p'), monic.
inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

/// p = x^a * g with g(0) != 0.
struct ZeroSplit {
  std::size_t a = 0;
  RatPoly g;
};

inline ZeroSplit split_at_zero(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("split_at_zero: zero polynomial");
  const auto& c = p.coefficients();
  std::size_t a = 0;
  while (c[a] == 0) ++a;
  return {a, RatPoly(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(a), c.end()))};
}

struct BezoutPair {
  RatPoly u;
  RatPoly v;
};

/// u*p + v*q = 1 with deg u < deg q and deg v < deg p, for coprime p, q.
inline BezoutPair bezout_coprime(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("bezout_coprime: zero polynomial");
  // Invariant: r0 = s0*p + t0*q, r1 = s1*p + t1*q.
  RatPoly r0 = p, r1 = q;
  RatPoly s0 = RatPoly::constant(1), s1{};
  RatPoly t0{}, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    RatPoly s2 = s0 - quo * s1;
    RatPoly t2 = t0 - quo * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) {
    throw std::invalid_argument("bezout_coprime: inputs are not coprime, gcd = " + r0.monic().to_string());
  }
  const Rational inv = Rational(1) / r0.leading();
  RatPoly u = inv * s0;
  RatPoly v = inv * t0;
  // Normalize the degrees: reduce u modulo q and push the quotient into v.
  if (q.degree() > 0 && u.degree() >= q.degree()) {
    auto [quo, rem] = divmod(u, q);
    u = rem;
    v = v + quo * p;
  } else if (q.degree() == 0) {
    u = RatPoly{};
    v = RatPoly::constant(Rational(1) / q.leading());
  }
  return {u, v};
}

}  // namespace qspectra
