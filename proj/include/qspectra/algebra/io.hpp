#pragma once

#include <qspectra/algebra/finite_algebra.hpp>

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

namespace qspectra {

namespace detail {

inline std::int64_t checked_int64(const Integer& z, const std::string& what) {
  if (!z.fits_slong_p()) throw std::overflow_error(what + " does not fit in a 64-bit integer");
  return z.get_si();
}

inline Vector rational_vector_from_json(const nlohmann::json& j, std::size_t dim, const std::string& field) {
  if (!j.is_array() || j.size() != dim)
    throw std::invalid_argument("field '" + field + "' must be an array of " + std::to_string(dim) + " rationals");
  Vector v;
  for (const auto& x : j) {
    if (x.is_string()) v.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) v.push_back(Rational(x.get<long>()));
    else throw std::invalid_argument("field '" + field + "' has a non-rational entry");
  }
  return v;
}

}  // namespace detail

/// Structure-constant file: only nonzero c_{ij}^k with i <= j are listed,
/// as [i, j, k, num, den].
inline nlohmann::json algebra_to_json(const FiniteCommAlgebra& a) {
  nlohmann::json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["fano_index"] = a.fano_index();
  j["dim_X"] = a.dim_x();
  j["basis_labels"] = a.basis_labels();
  j["degrees"] = a.degrees();
  auto vec = [](const Vector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.get_str());
    return arr;
  };
  j["anticanonical"] = vec(a.anticanonical());
  j["unit"] = vec(a.unit());
  nlohmann::json triples = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t jj = i; jj < a.dim(); ++jj)
      for (const auto& t : a.product(i, jj))
        triples.push_back({i, jj, t.k, detail::checked_int64(t.value.get_num(), "numerator"),
                           detail::checked_int64(t.value.get_den(), "denominator")});
  j["triples"] = std::move(triples);
  return j;
}

inline FiniteCommAlgebra algebra_from_json(const nlohmann::json& j) {
  for (const char* field : {"name", "dim", "fano_index", "dim_X", "degrees", "anticanonical", "unit", "triples"})
    if (!j.contains(field)) throw std::invalid_argument(std::string("algebra file is missing field '") + field + "'");
  FiniteCommAlgebra::Data d;
  d.name = j.at("name").get<std::string>();
  const auto dim = j.at("dim").get<std::size_t>();
  d.fano_index = j.at("fano_index").get<int>();
  d.dim_x = j.at("dim_X").get<int>();
  d.degrees = j.at("degrees").get<std::vector<int>>();
  if (j.contains("basis_labels")) {
    d.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
  } else {
    for (std::size_t i = 0; i < dim; ++i) d.basis_labels.push_back("b" + std::to_string(i));
  }
  if (d.basis_labels.size() != dim) throw std::invalid_argument("basis_labels length != dim");
  d.anticanonical = detail::rational_vector_from_json(j.at("anticanonical"), dim, "anticanonical");
  d.unit = detail::rational_vector_from_json(j.at("unit"), dim, "unit");
  d.products.resize(dim * dim);
  for (const auto& t : j.at("triples")) {
    if (!t.is_array() || t.size() != 5) throw std::invalid_argument("each triple must be [i, j, k, num, den]");
    const auto i = t[0].get<std::size_t>(), jj = t[1].get<std::size_t>(), k = t[2].get<std::size_t>();
    if (i > jj) throw std::invalid_argument("triple with i > j: [" + std::to_string(i) + "," + std::to_string(jj) + ",...]");
    if (jj >= dim || k >= dim) throw std::invalid_argument("triple index out of range");
    const Rational c = make_rational(Integer(t[3].get<long>()), Integer(t[4].get<long>()));
    for (const auto& existing : d.products[i * dim + jj])
      if (existing.k == k)
        throw std::invalid_argument("duplicate triple [" + std::to_string(i) + "," + std::to_string(jj) + "," +
                                    std::to_string(k) + ",...]");
    d.products[i * dim + jj].push_back({k, c});
    if (i != jj) d.products[jj * dim + i].push_back({k, c});
  }
  return FiniteCommAlgebra(std::move(d));
}

inline FiniteCommAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file " + path);
  return algebra_from_json(nlohmann::json::parse(in));
}

inline void save_algebra(const FiniteCommAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write algebra file " + path);
  out << algebra_to_json(a).dump(1) << "\n";
}

}  // namespace qspectra
