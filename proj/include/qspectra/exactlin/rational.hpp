#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra {

// GMP rationals are kept canonical (lowest terms, positive denominator)
// by every gmpxx arithmetic operator.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

inline Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector scale(const Rational& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

}  // namespace qspectra
