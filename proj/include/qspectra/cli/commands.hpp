#pragma once

#include <qspectra/cli/registry.hpp>
#include <qspectra/cli/run_report.hpp>

#include <gmp.h>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef QSPECTRA_VERSION
#define QSPECTRA_VERSION "0.1.0"
#endif

namespace qspectra::cli {

enum ExitCode : int { kPass = 0, kInputError = 1, kInvariantViolation = 2 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline RunMetadata make_metadata(double seconds) {
  return {QSPECTRA_VERSION,
#if defined(__clang__)
          "clang " __clang_version__,
#elif defined(__GNUC__)
          "gcc " __VERSION__,
#else
          "unknown",
#endif
          gmp_version, seconds};
}

inline RunReport build_report(const VarietyDescriptor& d) {
  RunReport r;
  r.variety = d.id;
  const FiniteCommAlgebra a = d.provider();
  r.spectrum = spectrum::quantum_spectrum_report(a);
  if (d.zero_part_target) r.jacobi = spectrum::compare_with_jacobi(spectrum::kappa_split(a).zero, *d.zero_part_target);
  return r;
}

/// Collection spec: {variety, fano_index, starting_block: [bundle strings], support: [ints]}.
inline lefschetz::LefschetzCollection collection_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("collection spec must be a JSON object");
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw InputError(std::string("collection spec lacks '") + key + "'");
    return j.at(key);
  };
  const auto& variety = require("variety");
  const auto& m = require("fano_index");
  const auto& block = require("starting_block");
  const auto& support = require("support");
  if (!variety.is_string()) throw InputError("'variety' must be a string");
  if (!m.is_number_integer()) throw InputError("'fano_index' must be an integer");
  if (!block.is_array()) throw InputError("'starting_block' must be an array of bundle strings");
  if (!support.is_array()) throw InputError("'support' must be an array of integers");
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (!block[i].is_string()) throw InputError("starting_block[" + std::to_string(i) + "] is not a string");
    objects.push_back(block[i].get<std::string>());
  }
  std::vector<int> sigma;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!support[i].is_number_integer()) throw InputError("support[" + std::to_string(i) + "] is not an integer");
    sigma.push_back(support[i].get<int>());
  }
  const bool full = j.value("asserted_full", false);
  try {
    return {variety.get<std::string>(), objects, sigma, m.get<int>(), full};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline lefschetz::LefschetzCollection load_collection(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open collection file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return collection_from_json(j);
}

inline void emit(const RunReport& r, const std::string& json_path, std::ostream& out) {
  out << to_markdown(r);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw InputError("cannot write '" + json_path + "'");
    f << to_json(r).dump(2) << "\n";
  }
}

struct ReportOptions {
  std::string json_path;
  bool metadata = false;
};

inline int cmd_report(const std::string& id, const ReportOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const auto start = std::chrono::steady_clock::now();
    const VarietyDescriptor& d = lookup(id);
    RunReport r = build_report(d);
    if (opt.metadata)
      r.metadata = make_metadata(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    emit(r, opt.json_path, out);
    if (!r.spectrum.consistent()) {
      err << "internal invariant violation in " << id << "\n";
      return kInvariantViolation;
    }
    return kPass;
  } catch (const UnknownVariety& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

struct CheckOptions {
  bool bwb = false;
  /// Also require the conjecture-shape checks (rectangular/residual).
  bool strict = false;
  std::string json_path;
  bool metadata = false;
};

/// Exit 0 iff the requested checks pass: total length always, the shape
/// checks under --strict, exceptionality under --bwb.
inline int cmd_check(const std::string& path, const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  try {
    const auto c = load_collection(path);
    const VarietyDescriptor& d = lookup(c.variety());
    if (d.kind == VarietyKind::JacobiTarget) throw InputError("'" + d.id + "' is not a variety");
    r = build_report(d);
    if (!r.spectrum.consistent()) {
      emit(r, opt.json_path, out);
      err << "internal invariant violation in " << d.id << "\n";
      return kInvariantViolation;
    }
    try {
      r.numerology = lefschetz::conjecture_numerology(r.spectrum, c);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    r.collection = c;
    if (opt.bwb) {
      try {
        r.bwb = bwb::check_collection(c);
      } catch (const bwb::UnsupportedBackend& e) {
        r.warnings.push_back(std::string(e.what()) + "; numerology only");
      } catch (const bwb::BundleParseError& e) {
        throw InputError(e.what());
      }
    }
  } catch (const UnknownVariety& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  if (opt.metadata)
    r.metadata = make_metadata(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  emit(r, opt.json_path, out);

  bool ok = r.numerology->find("total_length")->passed;
  if (opt.strict) ok = ok && r.numerology->all_passed();
  if (r.bwb) ok = ok && r.bwb->passed();
  if (!ok) err << "collection check failed\n";
  return ok ? kPass : kInputError;
}

inline int cmd_export(const std::string& dir, std::ostream& out, std::ostream& err) {
  try {
    const std::filesystem::path root = dir.empty() ? data_dir() : std::filesystem::path(dir);
    std::filesystem::create_directories(root / "ig2");
    for (int n = 2; n <= 5; ++n) {
      const auto path = ig2_data_file(n, root);
      save_algebra(qh_ig2(n), path.string());
      out << "wrote " << path.string() << "\n";
    }
    return kPass;
  } catch (const std::exception& e) {
    err << "export failed: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace qspectra::cli
