#pragma once

#include <qspectra/bwb/bott.hpp>
#include <qspectra/bwb/bundle.hpp>
#include <qspectra/lefschetz/collection.hpp>

#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra::bwb {

inline BundleExpr hom_bundle(const BundleExpr& e, const BundleExpr& f) { return tensor(e.dual(), f); }

inline CohomologyTable ext_table(const BundleExpr& e, const BundleExpr& f) { return cohomology(hom_bundle(e, f)); }

class UnsupportedBackend : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Where a variety id lives for Bott computations: Pn is G(1,n+1), IG(2,2n)
/// is a hyperplane section of G(2,2n).
struct Ambient {
  int k = 0;
  int n = 0;
  bool hyperplane = false;
};

inline Ambient ambient_for(const std::string& variety) {
  std::smatch m;
  static const std::regex proj(R"(P(\d+))");
  static const std::regex grass(R"(G\((\d+),(\d+)\))");
  static const std::regex ig(R"(IG\(2,(\d+)\))");
  if (std::regex_match(variety, m, proj)) return {1, std::stoi(m[1]) + 1, false};
  if (std::regex_match(variety, m, grass)) {
    const int k = std::stoi(m[1]), n = std::stoi(m[2]);
    if (0 < k && k < n) return {k, n, false};
  }
  if (std::regex_match(variety, m, ig)) {
    const int n2 = std::stoi(m[1]);
    if (n2 >= 4 && n2 % 2 == 0) return {2, n2, true};
  }
  throw UnsupportedBackend("no Borel-Weil-Bott backend for variety '" + variety + "'");
}

struct HyperplaneExt {
  enum class Verdict { Vanishes, Dims, Inconclusive };
  Verdict verdict = Verdict::Vanishes;
  CohomologyTable dims;
  CohomologyTable t0;
  CohomologyTable t1;
  std::string details;
};

inline std::string verdict_name(HyperplaneExt::Verdict v) {
  switch (v) {
    case HyperplaneExt::Verdict::Vanishes: return "vanishes";
    case HyperplaneExt::Verdict::Dims: return "dims";
    case HyperplaneExt::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Ext between restrictions to IG(2,2n) of bundles on G(2,2n), through
/// 0 -> F(-1) -> F -> F|_IG -> 0. Degrees where both T0 and T1 are nonzero
/// would need the connecting map, so the answer is then inconclusive.
inline HyperplaneExt ext_hyperplane(const BundleExpr& e, const BundleExpr& f, int n) {
  if (e.k() != 2 || e.n() != 2 * n || f.k() != 2 || f.n() != 2 * n)
    throw std::invalid_argument("ext_hyperplane: bundles must live on G(2," + std::to_string(2 * n) + ")");
  HyperplaneExt r;
  r.t0 = ext_table(e, f);
  r.t1 = ext_table(e, f.twist(-1));
  std::vector<int> clashes;
  for (const auto& [d, v] : r.t0.entries())
    if (r.t1[d] != 0) clashes.push_back(d);
  if (!clashes.empty()) {
    r.verdict = HyperplaneExt::Verdict::Inconclusive;
    r.details = "T0 = " + r.t0.to_string() + ", T1 = " + r.t1.to_string() + "; overlap in degree";
    for (int d : clashes) r.details += " " + std::to_string(d);
    return r;
  }
  for (const auto& [d, v] : r.t0.entries()) r.dims.add(d, v);
  for (const auto& [d, v] : r.t1.entries()) r.dims.add(d - 1, v);
  r.verdict = r.dims.empty() ? HyperplaneExt::Verdict::Vanishes : HyperplaneExt::Verdict::Dims;
  r.details = "T0 = " + r.t0.to_string() + ", T1 = " + r.t1.to_string();
  return r;
}

struct PairIssue {
  std::string first;
  std::string second;
  std::string problem;
  std::string table;
};

struct CollectionCheck {
  std::string variety;
  std::vector<std::string> objects;
  std::size_t exceptional_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<PairIssue> failures;
  std::vector<PairIssue> inconclusive;

  bool passed() const { return failures.empty() && inconclusive.empty(); }
};

inline std::string object_label(const std::string& bundle, int twist) {
  if (twist == 0) return bundle;
  return "(" + bundle + ")(" + std::to_string(twist) + ")";
}

/// Checks that the Lefschetz-ordered object list is exceptional: every object
/// has Ext = {0: 1} with itself and every Ext from a later object to an earlier
/// one vanishes.
inline CollectionCheck check_collection(const lefschetz::LefschetzCollection& c) {
  const Ambient amb = ambient_for(c.variety());
  CollectionCheck out;
  out.variety = c.variety();
  std::vector<BundleExpr> block;
  for (const auto& s : c.starting_block()) block.push_back(parse_bundle(s, amb.k, amb.n));
  std::vector<BundleExpr> objs;
  for (const auto& [idx, t] : c.objects()) {
    objs.push_back(block[idx].twist(t));
    out.objects.push_back(object_label(c.starting_block()[idx], t));
  }
  const CohomologyTable point{{0, Integer(1)}};
  auto ext = [&](std::size_t a, std::size_t b) -> std::optional<CohomologyTable> {
    if (!amb.hyperplane) return ext_table(objs[a], objs[b]);
    auto h = ext_hyperplane(objs[a], objs[b], amb.n / 2);
    if (h.verdict == HyperplaneExt::Verdict::Inconclusive) {
      out.inconclusive.push_back({out.objects[a], out.objects[b], "connecting map needed", h.details});
      return std::nullopt;
    }
    return h.dims;
  };
  for (std::size_t a = 0; a < objs.size(); ++a) {
    ++out.exceptional_checked;
    if (auto t = ext(a, a); t && !(*t == point))
      out.failures.push_back({out.objects[a], out.objects[a], "not exceptional", t->to_string()});
  }
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      ++out.pairs_checked;
      if (auto t = ext(a, b); t && !t->empty())
        out.failures.push_back({out.objects[a], out.objects[b], "backward Ext nonzero", t->to_string()});
    }
  return out;
}

}  // namespace qspectra::bwb
