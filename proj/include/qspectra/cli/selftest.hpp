#pragma once

#include <qspectra/algebra/validate.hpp>
#include <qspectra/cli/registry.hpp>
#include <qspectra/lefschetz/collection.hpp>
#include <qspectra/bwb/ext.hpp>
#include <qspectra/spectrum/report.hpp>

#include <filesystem>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace qspectra::cli {

struct SelfCheck {
  std::string module;
  std::string name;
  /// Returns an empty string on success, a description of the failure otherwise.
  std::function<std::string()> run;
};

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

inline bwb::BundleExpr random_irreducible(std::mt19937& rng, int k, int n, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  auto weight = [&](int len) {
    bwb::Weight w(static_cast<std::size_t>(len));
    for (auto& x : w) x = d(rng);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
  };
  return bwb::BundleExpr::irreducible(k, n, weight(k), weight(n - k));
}

/// E^*(x)F in degree i against Ext(F, E (x) omega) in degree k(n-k) - i.
inline std::string serre_mismatch(const bwb::BundleExpr& e, const bwb::BundleExpr& f) {
  const int top = e.k() * (e.n() - e.k());
  const auto lhs = bwb::ext_table(e, f);
  const auto rhs = bwb::ext_table(f, e.twist(-e.n()));
  bwb::CohomologyTable mirrored;
  for (const auto& [d, v] : rhs.entries()) mirrored.add(top - d, v);
  if (lhs == mirrored) return "";
  return "Serre duality fails for " + e.to_string() + ", " + f.to_string() + ": " + lhs.to_string() + " vs " +
         mirrored.to_string();
}

inline std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

inline std::vector<SelfCheck> selfchecks() {
  std::vector<SelfCheck> c;

  c.push_back({"exactlin", "cayley-hamilton", [] {
                 std::mt19937 rng(7);
                 for (std::size_t n = 1; n <= 8; ++n) {
                   const RatMatrix m = random_matrix(rng, n);
                   const RatMatrix z = charpoly(m)(m);
                   if (!(z == RatMatrix(n, n))) return "p(M) != 0 for a random " + std::to_string(n) + "x" + std::to_string(n);
                 }
                 return std::string();
               }});
  c.push_back({"exactlin", "bezout-identity", [] {
                 const RatPoly x = RatPoly::x();
                 const RatPoly p = x * x * x - RatPoly::constant(2), q = x * x + RatPoly::constant(1);
                 const auto [u, v] = bezout_coprime(p, q);
                 return expect(u * p + v * q == RatPoly::constant(1), "u p + v q != 1");
               }});

  c.push_back({"schur", "rim-hook-vs-presentation", [] {
                 for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
                   const auto a = schur::qh_grassmannian(k, n);
                   const auto b = from_presentation(grassmannian_presentation(k, n));
                   if (charpoly(mult_matrix(a, a.anticanonical())) != charpoly(mult_matrix(b, b.anticanonical())))
                     return "charpoly of -K differs for " + a.name();
                 }
                 return std::string();
               }});
  c.push_back({"schur", "quantum-product-nonnegative", [] {
                 for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
                   const auto parts = schur::box_partitions(k, n);
                   for (const auto& l : parts)
                     for (const auto& m : parts)
                       for (const auto& [nu, coeff] : schur::quantum_product(l, m))
                         if (coeff < 0) return "negative coefficient in G(" + std::to_string(k) + "," + std::to_string(n) + ")";
                 }
                 return std::string();
               }});

  c.push_back({"algebra", "registry-validates", [] {
                 for (const auto& d : registry()) {
                   const auto rep = validate_algebra(d.provider());
                   if (!rep.ok()) return d.id + ": " + rep.violations.front().detail;
                 }
                 return std::string();
               }});
  c.push_back({"algebra", "ig2-data-matches-presentation", [] {
                 for (int n = 2; n <= 5; ++n) {
                   const auto path = ig2_data_file(n);
                   if (!std::filesystem::exists(path)) return "missing data file " + path.string();
                   const auto stored = load_algebra(path.string());
                   const auto rep = validate_algebra(stored);
                   if (!rep.ok()) return path.string() + ": " + rep.violations.front().detail;
                   if (algebra_to_json(stored) != algebra_to_json(qh_ig2(n)))
                     return path.string() + " differs from the presentation";
                 }
                 return std::string();
               }});

  c.push_back({"spectrum", "reports-consistent", [] {
                 for (const auto& d : registry()) {
                   const auto r = spectrum::quantum_spectrum_report(d.provider());
                   if (!r.consistent()) return d.id + ": " + r.inconsistencies.front();
                 }
                 return std::string();
               }});
  c.push_back({"spectrum", "rotation-and-idempotent", [] {
                 for (const auto& d : registry()) {
                   if (d.kind == VarietyKind::JacobiTarget) continue;
                   const auto a = d.provider();
                   const auto s = spectrum::kappa_split(a);
                   if (a.multiply(s.idempotent, s.idempotent) != s.idempotent) return d.id + ": e0^2 != e0";
                   if (!spectrum::rotation_invariant(charpoly(mult_matrix(a, a.anticanonical())), a.fano_index()))
                     return d.id + ": charpoly not invariant under m-th roots of unity";
                 }
                 return std::string();
               }});

  c.push_back({"lefschetz", "builtin-numerology", [] {
                 std::vector<lefschetz::LefschetzCollection> cols;
                 for (int n = 1; n <= 10; ++n) cols.push_back(lefschetz::builtin_collection("beilinson", n));
                 cols.push_back(lefschetz::builtin_collection("minimal_g24"));
                 for (int n = 3; n <= 5; ++n) cols.push_back(lefschetz::builtin_collection("kuznetsov_ig2", n));
                 for (const auto& col : cols) {
                   const auto r = spectrum::quantum_spectrum_report(lookup(col.variety()).provider());
                   const auto v = lefschetz::conjecture_numerology(r, col);
                   if (!v.all_passed()) return "numerology fails on " + col.variety();
                 }
                 const auto g24 = spectrum::quantum_spectrum_report(lookup("G(2,4)").provider());
                 const auto kap = lefschetz::conjecture_numerology(g24, lefschetz::builtin_collection("kapranov_g24"));
                 return expect(kap.find("total_length")->passed && kap.rect_length == 0 && kap.residual_expected == 6,
                               "Kapranov collection numerology changed");
               }});

  c.push_back({"bwb", "builtin-collections-exceptional", [] {
                 std::vector<lefschetz::LefschetzCollection> cols;
                 for (int n = 1; n <= 6; ++n) cols.push_back(lefschetz::builtin_collection("beilinson", n));
                 cols.push_back(lefschetz::builtin_collection("kapranov_g24"));
                 cols.push_back(lefschetz::builtin_collection("minimal_g24"));
                 for (const auto& col : cols)
                   if (!bwb::check_collection(col).passed()) return "collection on " + col.variety() + " not exceptional";
                 return std::string();
               }});
  c.push_back({"bwb", "serre-duality", [] {
                 std::mt19937 rng(11);
                 for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}})
                   for (int i = 0; i < 40; ++i) {
                     auto msg = serre_mismatch(random_irreducible(rng, k, n, 2), random_irreducible(rng, k, n, 2));
                     if (!msg.empty()) return msg;
                   }
                 return std::string();
               }});
  return c;
}

inline std::set<std::string> selftest_modules() {
  std::set<std::string> m;
  for (const auto& c : selfchecks()) m.insert(c.module);
  return m;
}

inline int cmd_selftest(const std::string& filter, std::ostream& out, std::ostream& err) {
  const auto modules = selftest_modules();
  if (!filter.empty() && !modules.count(filter)) {
    err << "unknown module '" << filter << "'; available:";
    for (const auto& m : modules) err << " " << m;
    err << "\n";
    return 1;
  }
  int failed = 0, ran = 0;
  for (const auto& c : selfchecks()) {
    if (!filter.empty() && c.module != filter) continue;
    ++ran;
    std::string msg;
    try {
      msg = c.run();
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    out << (msg.empty() ? "PASS " : "FAIL ") << c.module << "/" << c.name;
    if (!msg.empty()) out << "  " << msg;
    out << "\n";
    if (!msg.empty()) ++failed;
  }
  out << ran - failed << "/" << ran << " checks passed\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace qspectra::cli
