#pragma once

#include <qspectra/algebra/io.hpp>
#include <qspectra/algebra/jacobi.hpp>
#include <qspectra/algebra/providers.hpp>
#include <qspectra/schur/quantum_grassmannian.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef QSPECTRA_DEFAULT_DATA_DIR
#define QSPECTRA_DEFAULT_DATA_DIR "data"
#endif

namespace qspectra::cli {

enum class VarietyKind { Projective, Grassmannian, Isotropic, JacobiTarget };

struct VarietyDescriptor {
  std::string id;
  std::string display_name;
  VarietyKind kind = VarietyKind::Projective;
  int fano_index = 1;
  int dim_x = 0;
  std::function<FiniteCommAlgebra()> provider;
  /// Dynkin type whose Jacobi ring should match QS^o, when one is expected.
  std::optional<AdeType> zero_part_target;
};

class UnknownVariety : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("QSPECTRA_DATA"); env && *env) return env;
  return QSPECTRA_DEFAULT_DATA_DIR;
}

inline std::filesystem::path ig2_data_file(int n, const std::filesystem::path& dir = data_dir()) {
  return dir / "ig2" / ("ig2_" + std::to_string(2 * n) + ".json");
}

/// Stored structure constants when present, the presentation otherwise.
inline FiniteCommAlgebra load_ig2(int n) {
  const auto path = ig2_data_file(n);
  if (std::filesystem::exists(path)) return load_algebra(path.string());
  return qh_ig2(n);
}

inline const std::vector<VarietyDescriptor>& registry() {
  static const std::vector<VarietyDescriptor> entries = [] {
    std::vector<VarietyDescriptor> r;
    for (int n = 1; n <= 10; ++n)
      r.push_back({"P" + std::to_string(n), "projective space P^" + std::to_string(n), VarietyKind::Projective, n + 1, n,
                   [n] { return qh_projective(n); }, std::nullopt});
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}}) {
      const std::string id = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
      r.push_back({id, "Grassmannian " + id, VarietyKind::Grassmannian, n, k * (n - k),
                   [k, n] { return schur::qh_grassmannian(k, n); }, std::nullopt});
    }
    for (int n = 2; n <= 5; ++n) {
      const std::string id = "IG(2," + std::to_string(2 * n) + ")";
      r.push_back({id, "isotropic Grassmannian " + id, VarietyKind::Isotropic, 2 * n - 1, 4 * n - 5,
                   [n] { return load_ig2(n); }, AdeType{'A', n - 1}});
    }
    std::vector<AdeType> types;
    for (int k = 1; k <= 8; ++k) types.push_back({'A', k});
    for (int k = 4; k <= 6; ++k) types.push_back({'D', k});
    for (int k = 6; k <= 8; ++k) types.push_back({'E', k});
    for (const auto& t : types)
      r.push_back({"Jac(" + t.to_string() + ")", "Jacobi ring of the " + t.to_string() + " singularity",
                   VarietyKind::JacobiTarget, 1, 0, [t] { return jacobi_ring(t); }, std::nullopt});
    return r;
  }();
  return entries;
}

inline std::string registry_listing() {
  std::string s;
  for (const auto& d : registry()) s += (s.empty() ? "" : " ") + d.id;
  return s;
}

inline const VarietyDescriptor& lookup(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  throw UnknownVariety("unknown variety '" + id + "'; registered: " + registry_listing());
}

}  // namespace qspectra::cli
