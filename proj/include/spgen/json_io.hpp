#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spgen/closure.hpp"
#include "spgen/constructions.hpp"
#include "spgen/cyclo.hpp"
#include "spgen/matrix.hpp"
#include "spgen/rational.hpp"

namespace spgen {

// Rational <-> "p/q" string, hooked into nlohmann's ADL machinery so
// vectors of rationals serialize directly.
inline void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }
inline void from_json(const nlohmann::json& j, Rational& r) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  r = Rational::parse(j.get<std::string>());
}

inline nlohmann::json cyclo_to_json(const CycloElement& a) {
  return nlohmann::json{{"m", a.order()}, {"coeffs", a.residue().coeffs()}};
}

inline CycloElement cyclo_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
    throw std::invalid_argument("expected a cyclotomic element object {m, coeffs}");
  const unsigned m = j.at("m").get<unsigned>();
  auto coeffs = j.at("coeffs").get<std::vector<Rational>>();
  return CycloElement(CycloField::of(m), Poly(std::move(coeffs)));
}

inline nlohmann::json mat_to_json(const Mat<Rational>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline nlohmann::json mat_to_json(const Mat<CycloElement>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyclo_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace detail {
inline std::pair<std::size_t, std::size_t> mat_shape_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("expected a matrix object {rows, cols, entries}");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows)
    throw std::invalid_argument("matrix entries must hold one array per row");
  for (const auto& row : entries)
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix row length does not match cols");
  return {rows, cols};
}
}  // namespace detail

inline Mat<Rational> mat_from_json(const nlohmann::json& j) {
  const auto [rows, cols] = detail::mat_shape_from_json(j);
  Mat<Rational> m = Mat<Rational>::zero(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = j.at("entries")[i][c].get<Rational>();
  return m;
}

inline Mat<CycloElement> cyclo_mat_from_json(const nlohmann::json& j) {
  const auto [rows, cols] = detail::mat_shape_from_json(j);
  CycloElement first = cyclo_from_json(j.at("entries")[0][0]);
  Mat<CycloElement> m(rows, cols, zero_like(first));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = cyclo_from_json(j.at("entries")[i][c]);
  return m;
}

// A bracket word is an integer leaf or a two-element array [left, right].
inline nlohmann::json word_to_json(const BracketWord& w) {
  if (w.is_leaf()) return w.index();
  return nlohmann::json::array({word_to_json(w.left()), word_to_json(w.right())});
}

inline BracketWord word_from_json(const nlohmann::json& j) {
  if (j.is_number_integer() && j.get<long long>() >= 0)
    return BracketWord::leaf(static_cast<std::size_t>(j.get<long long>()));
  if (j.is_array() && j.size() == 2)
    return BracketWord::bracket(word_from_json(j[0]), word_from_json(j[1]));
  throw std::invalid_argument(
      "malformed bracket word: expected a non-negative integer or a pair [left, right]");
}

inline nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : cert.generators) gens.push_back(mat_to_json(g));
  nlohmann::json words = nlohmann::json::array();
  for (const auto& w : cert.words) words.push_back(word_to_json(w));
  return nlohmann::json{{"n", cert.n},
                        {"generators", std::move(gens)},
                        {"words", std::move(words)},
                        {"dimension", cert.dimension}};
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators") || !j.contains("words") ||
      !j.contains("dimension"))
    throw std::invalid_argument("expected a certificate object {n, generators, words, dimension}");
  Certificate cert;
  cert.n = j.at("n").get<std::size_t>();
  for (const auto& g : j.at("generators")) cert.generators.push_back(mat_from_json(g));
  for (const auto& w : j.at("words")) cert.words.push_back(word_from_json(w));
  cert.dimension = j.at("dimension").get<std::size_t>();
  return cert;
}

inline nlohmann::json pair_to_json(const GeneratorPair& p) {
  nlohmann::json j{{"n", p.n},
                   {"tag", to_string(p.tag)},
                   {"x", mat_to_json(p.x)},
                   {"y", mat_to_json(p.y)}};
  j["t"] = p.t ? mat_to_json(*p.t) : nlohmann::json(nullptr);
  return j;
}

inline GeneratorPair pair_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("tag") || !j.contains("x") ||
      !j.contains("y"))
    throw std::invalid_argument("expected a generator pair object {n, tag, x, y, t}");
  GeneratorPair p;
  p.n = j.at("n").get<std::size_t>();
  p.tag = pair_tag_from_string(j.at("tag").get<std::string>());
  p.x = mat_from_json(j.at("x"));
  p.y = mat_from_json(j.at("y"));
  if (j.contains("t") && !j.at("t").is_null()) p.t = mat_from_json(j.at("t"));
  return p;
}

}  // namespace spgen
