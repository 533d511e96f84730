#pragma once

#include <qspectra/exactlin/rational.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i, int power = 1) {
    Exponents e(nvars, 0);
    e.at(i) = power;
    return monomial(std::move(e));
  }

  static MultiPoly monomial(Exponents e, const Rational& c = 1) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent vector has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly d(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) == 0) continue;
      Exponents f = e;
      --f[var];
      d.add_term(f, c * e[var]);
    }
    return d;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.require_same(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }

  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a.require_same(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }

  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same(b);
    MultiPoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const std::string mono = monomial_string(e, names);
      const Rational mag = abs(c);
      if (mono == "1") {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        os << mono;
      }
    }
    return os.str();
  }

  static std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names.at(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  void require_same(const MultiPoly& b) const {
    if (nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace qspectra
