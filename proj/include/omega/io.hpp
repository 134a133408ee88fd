#pragma once

#include <string>

#include <json.hpp>

#include "omega/form.hpp"
#include "omega/matrix.hpp"
#include "omega/poly.hpp"

namespace omega {

// Canonical JSON encodings. Rationals travel as strings ("p" or
// "p/q") so round-trips are bit-exact; polynomial terms are emitted in
// graded lexicographic order.
using Json = nlohmann::ordered_json;

inline Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

inline Mat matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw schema_error("matrix JSON must be {\"rows\": [[...], ...]}");
  const Json& rows = j["rows"];
  std::size_t nr = rows.size();
  if (nr == 0) throw schema_error("matrix must have at least one row");
  std::size_t nc = rows[0].is_array() ? rows[0].size() : 0;
  if (nc == 0) throw schema_error("matrix rows must be non-empty arrays");
  Mat m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (!rows[i].is_array() || rows[i].size() != nc)
      throw schema_error("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) {
      if (!rows[i][j].is_string())
        throw schema_error("matrix entries must be rational strings");
      m(i, j) = parse_rational(rows[i][j].get<std::string>());
    }
  }
  return m;
}

inline Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["c"] = to_string(c);
    term["e"] = e;
    terms.push_back(std::move(term));
  }
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline MultiPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw schema_error("polynomial JSON must have nvars and terms");
  if (!j["nvars"].is_number_unsigned())
    throw schema_error("nvars must be a non-negative integer");
  std::size_t nvars = j["nvars"].get<std::size_t>();
  MultiPoly p(nvars);
  if (!j["terms"].is_array()) throw schema_error("terms must be an array");
  for (const Json& term : j["terms"]) {
    if (!term.is_object() || !term.contains("c") || !term.contains("e") ||
        !term["c"].is_string() || !term["e"].is_array())
      throw schema_error("each term must be {\"c\": \"...\", \"e\": [...]}");
    Exponents e;
    for (const Json& x : term["e"]) {
      if (!x.is_number_unsigned())
        throw schema_error("exponents must be non-negative integers");
      e.push_back(x.get<unsigned>());
    }
    if (e.size() != nvars) throw schema_error("exponent length mismatch");
    p.add_term(e, parse_rational(term["c"].get<std::string>()));
  }
  return p;
}

inline Json field_to_json(const PolyVectorField& x) {
  Json comps = Json::array();
  for (const auto& c : x.components()) comps.push_back(poly_to_json(c));
  return Json{{"nvars", x.nvars()}, {"components", std::move(comps)}};
}

inline PolyVectorField field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("components") ||
      !j["components"].is_array())
    throw schema_error("field JSON must have nvars and components");
  std::size_t nvars = j["nvars"].get<std::size_t>();
  if (j["components"].size() != nvars)
    throw schema_error("field must have one component per variable");
  std::vector<MultiPoly> comps;
  for (const Json& c : j["components"]) comps.push_back(poly_from_json(c));
  for (const auto& c : comps)
    if (c.nvars() != nvars) throw schema_error("component nvars mismatch");
  return PolyVectorField(std::move(comps));
}

inline SymplecticForm form_from_json(const Json& j) {
  return SymplecticForm::validate(matrix_from_json(j));
}

}  // namespace omega
