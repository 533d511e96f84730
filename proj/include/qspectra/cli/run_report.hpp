#pragma once

#include <qspectra/bwb/ext.hpp>
#include <qspectra/lefschetz/collection.hpp>
#include <qspectra/spectrum/report.hpp>

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qspectra::cli {

using nlohmann::json;

struct RunMetadata {
  std::string tool_version;
  std::string compiler;
  std::string gmp_version;
  double seconds = 0.0;
};

struct RunReport {
  std::string variety;
  spectrum::SpectrumReport spectrum;
  std::optional<spectrum::JacobiComparison> jacobi;
  std::optional<lefschetz::LefschetzCollection> collection;
  std::optional<lefschetz::NumerologyVerdict> numerology;
  std::optional<bwb::CollectionCheck> bwb;
  std::vector<std::string> warnings;
  std::optional<RunMetadata> metadata;
};

inline json local_to_json(const spectrum::LocalInvariants& l) {
  return {{"length", l.dim},
          {"points", l.geometric_points},
          {"single_point", l.is_single_point},
          {"hilbert_function", l.hilbert_function},
          {"socle_dim", l.socle_dim}};
}

inline json spectrum_to_json(const spectrum::SpectrumReport& r) {
  const auto& o = r.orbits;
  return {{"algebra", r.algebra},
          {"dim", r.dim_total},
          {"fano_index", r.fano_index},
          {"dim_X", r.dim_x},
          {"kappa_charpoly", r.kappa_charpoly.to_string()},
          {"kappa_minpoly", r.kappa_minpoly.to_string()},
          {"semisimple", r.semisimple},
          {"nilradical_dim", r.nilradical_dim},
          {"qs_nonzero",
           {{"length", r.dim_nonzero_part},
            {"points", r.nonzero_point_count},
            {"reduced", r.nonzero_semisimple},
            {"k_len", o.k_len.get_str()},
            {"k_pts", o.k_pts.get_str()},
            {"rotation_ok", o.rotation_ok}}},
          {"qs_zero", local_to_json(r.zero_part)},
          {"inconsistencies", r.inconsistencies}};
}

inline json numerology_to_json(const lefschetz::LefschetzCollection& c, const lefschetz::NumerologyVerdict& v) {
  json checks = json::array();
  for (const auto& ch : v.checks)
    checks.push_back({{"name", ch.name}, {"applicable", ch.applicable}, {"passed", ch.passed}, {"explanation", ch.explanation}});
  return {{"variety", c.variety()},
          {"starting_block", c.starting_block()},
          {"support", c.support()},
          {"rectangular", c.rectangular()},
          {"total_length", v.total_length},
          {"rectangular_length", v.rect_length},
          {"residual_expected", v.residual_expected},
          {"k", v.k_required.get_str()},
          {"checks", checks}};
}

inline json issues_to_json(const std::vector<bwb::PairIssue>& issues) {
  json a = json::array();
  for (const auto& i : issues) a.push_back({{"from", i.first}, {"to", i.second}, {"problem", i.problem}, {"ext", i.table}});
  return a;
}

inline json bwb_to_json(const bwb::CollectionCheck& c) {
  return {{"variety", c.variety},
          {"objects", c.objects},
          {"exceptional_checked", c.exceptional_checked},
          {"pairs_checked", c.pairs_checked},
          {"passed", c.passed()},
          {"failures", issues_to_json(c.failures)},
          {"inconclusive", issues_to_json(c.inconclusive)}};
}

/// Canonical body is deterministic; metadata only appears when requested.
inline json to_json(const RunReport& r) {
  json j;
  j["variety"] = r.variety;
  j["spectrum"] = spectrum_to_json(r.spectrum);
  if (r.jacobi) {
    const auto& c = *r.jacobi;
    j["jacobi_comparison"] = {{"target", c.target},        {"ours", local_to_json(c.ours)},
                              {"theirs", local_to_json(c.theirs)}, {"dim_match", c.dim_match},
                              {"points_match", c.points_match}, {"hilbert_match", c.hilbert_match},
                              {"socle_match", c.socle_match},   {"full_match", c.full_match()}};
  }
  if (r.collection && r.numerology) j["numerology"] = numerology_to_json(*r.collection, *r.numerology);
  if (r.bwb) j["bwb"] = bwb_to_json(*r.bwb);
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  if (r.metadata)
    j["metadata"] = {{"tool_version", r.metadata->tool_version},
                     {"compiler", r.metadata->compiler},
                     {"gmp_version", r.metadata->gmp_version},
                     {"seconds", r.metadata->seconds}};
  return j;
}

inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string to_markdown(const RunReport& r) {
  const auto& s = r.spectrum;
  std::ostringstream md;
  md << "## " << r.variety << "\n\n";
  md << "| quantity | value |\n|---|---|\n";
  md << "| dim of algebra | " << s.dim_total << " |\n";
  md << "| Fano index m | " << s.fano_index << " |\n";
  md << "| dim X | " << s.dim_x << " |\n";
  md << "| charpoly of -K | " << s.kappa_charpoly.to_string() << " |\n";
  md << "| semisimple | " << yes_no(s.semisimple) << " |\n";
  md << "| length QS^x | " << s.dim_nonzero_part << " |\n";
  md << "| points of QS^x | " << s.nonzero_point_count << " |\n";
  md << "| QS^x reduced | " << yes_no(s.nonzero_semisimple) << " |\n";
  md << "| orbits k (length/m) | " << s.orbits.k_len.get_str() << " |\n";
  md << "| orbits k (points/m) | " << s.orbits.k_pts.get_str() << " |\n";
  md << "| rotation invariant | " << yes_no(s.orbits.rotation_ok) << " |\n";
  md << "| length QS^o | " << s.zero_part.dim << " |\n";
  md << "| points of QS^o | " << s.zero_part.geometric_points << " |\n";
  md << "| Hilbert function QS^o | " << join_sizes(s.zero_part.hilbert_function) << " |\n";
  md << "| socle dim QS^o | " << s.zero_part.socle_dim << " |\n";
  if (r.jacobi)
    md << "| QS^o vs " << r.jacobi->target << " | " << (r.jacobi->full_match() ? "match" : "mismatch") << " |\n";
  if (r.collection && r.numerology) {
    const auto& v = *r.numerology;
    md << "\n### collection on " << r.collection->variety() << "\n\n";
    md << "| sigma | total | rectangular | residual | k |\n|---|---|---|---|---|\n";
    md << "| " << join_ints(r.collection->support()) << " | " << v.total_length << " | " << v.rect_length << " | "
       << v.residual_expected << " | " << v.k_required.get_str() << " |\n\n";
    md << "| check | result | detail |\n|---|---|---|\n";
    for (const auto& c : v.checks)
      md << "| " << c.name << " | " << (!c.applicable ? "n/a" : c.passed ? "pass" : "fail") << " | " << c.explanation
         << " |\n";
  }
  if (r.bwb) {
    const auto& b = *r.bwb;
    md << "\n### Borel-Weil-Bott\n\n";
    md << b.objects.size() << " objects, " << b.pairs_checked << " ordered pairs: "
       << (b.passed() ? "exceptional" : "NOT verified") << "\n";
    for (const auto& f : b.failures) md << "- fail: Ext(" << f.first << ", " << f.second << ") " << f.problem << " " << f.table << "\n";
    for (const auto& f : b.inconclusive)
      md << "- inconclusive: Ext(" << f.first << ", " << f.second << ") " << f.problem << " " << f.table << "\n";
  }
  for (const auto& w : r.warnings) md << "\nwarning: " << w << "\n";
  if (!s.inconsistencies.empty()) {
    md << "\n### invariant violations\n\n";
    for (const auto& i : s.inconsistencies) md << "- " << i << "\n";
  }
  return md.str();
}

}  // namespace qspectra::cli
