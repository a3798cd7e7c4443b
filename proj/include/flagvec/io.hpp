#pragma once

// JSON documents for lattices, flag data, forms and reports. Exact numbers
// are always decimal strings or "p/q" strings.

#include <string>

#include "json.hpp"

#include "flagvec/cdindex.hpp"
#include "flagvec/errors.hpp"
#include "flagvec/exact.hpp"
#include "flagvec/families.hpp"
#include "flagvec/flag_vector.hpp"
#include "flagvec/flagalg.hpp"
#include "flagvec/forms.hpp"
#include "flagvec/lattice.hpp"

namespace flagvec::io {

using json = nlohmann::ordered_json;

namespace detail {

inline Integer integer_from(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw parse_error("expected an integer (number or decimal string)");
}

inline Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from(j));
  throw parse_error("expected a rational (\"p/q\" string or integer)");
}

inline int dimension_from(const json& doc) {
  if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_number_integer())
    throw parse_error("document needs an integer field 'd'");
  int d = doc["d"].get<int>();
  if (d < 0 || d > kMaxDimension) throw parse_error("dimension out of range");
  return d;
}

}  // namespace detail

inline json to_json(const FVector& f) {
  json arr = json::array();
  for (const Integer& x : f.components()) arr.push_back(to_string(x));
  return arr;
}

inline FVector fvector_from_json(const json& arr) {
  if (!arr.is_array()) throw parse_error("f-vector must be an array");
  std::vector<Integer> f;
  for (const json& x : arr) f.push_back(detail::integer_from(x));
  return FVector(std::move(f));
}

// Lattice: {"d": 3, "faces": [{"rank": -1, "vertices": []}, ...]}

inline json to_json(const FaceLattice& lattice) {
  json faces = json::array();
  for (const Face& f : lattice.faces()) faces.push_back({{"rank", f.rank}, {"vertices", f.vertices}});
  return {{"d", lattice.dim()}, {"faces", std::move(faces)}};
}

inline FaceLattice lattice_from_json(const json& doc) {
  const int d = detail::dimension_from(doc);
  if (!doc.contains("faces") || !doc["faces"].is_array()) throw parse_error("lattice document needs a 'faces' array");
  std::vector<Face> faces;
  try {
    for (const json& f : doc["faces"]) faces.push_back({f.at("rank").get<int>(), f.at("vertices").get<VertexSet>()});
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad face entry: ") + e.what());
  }
  return FaceLattice(d, std::move(faces));
}

// Full flag vector: {"d": 5, "f": [...], "flags": {"": "1", "0": "8", ...}}

inline json to_json(const FlagVector& v) {
  json flags = json::object();
  for (const auto& [s, x] : v.entries()) flags[s.key()] = to_string(x);
  json doc = {{"d", v.dim()}};
  bool has_f = true;
  for (int i = 0; i < v.dim(); ++i) has_f = has_f && v.contains(RankSet{i});
  if (has_f) doc["f"] = to_json(v.f_vector());
  doc["flags"] = std::move(flags);
  return doc;
}

inline FlagVector flag_vector_from_json(const json& doc) {
  const int d = detail::dimension_from(doc);
  const char* field = doc.contains("flags") ? "flags" : "entries";
  if (!doc.contains(field) || !doc[field].is_object()) throw parse_error("flag document needs a 'flags' object");
  FlagVector v(d);
  for (const auto& [key, value] : doc[field].items()) v.set(RankSet::from_key(key), detail::integer_from(value));
  return v;
}

// Sparse data: {"d": 6, "entries": {"": 1, "0": 22, "02": 780, ...}}

inline json to_json(const SparseFlagData& data, int d) {
  json entries = json::object();
  entries[""] = "1";
  for (const auto& [s, x] : data)
    if (!s.empty()) entries[s.key()] = to_string(x);
  return {{"d", d}, {"entries", std::move(entries)}};
}

inline std::pair<SparseFlagData, int> sparse_from_json(const json& doc) {
  const int d = detail::dimension_from(doc);
  if (!doc.contains("entries") || !doc["entries"].is_object())
    throw parse_error("sparse flag document needs an 'entries' object");
  SparseFlagData data;
  for (const auto& [key, value] : doc["entries"].items()) {
    RankSet s = RankSet::from_key(key);
    if (!s.fits(d)) throw parse_error("entry f_" + key + " exceeds dimension " + std::to_string(d));
    data[s] = detail::integer_from(value);
  }
  return {std::move(data), d};
}

// Form: {"d": 5, "coeffs": {"02": "-3", ...}}

inline json to_json(const FlagForm& m) {
  json coeffs = json::object();
  for (const auto& [s, c] : m.coeffs()) coeffs[s.key()] = to_string(c);
  return {{"d", m.dim()}, {"coeffs", std::move(coeffs)}};
}

inline FlagForm form_from_json(const json& doc) {
  const int d = detail::dimension_from(doc);
  if (!doc.contains("coeffs") || !doc["coeffs"].is_object()) throw parse_error("form document needs a 'coeffs' object");
  FlagForm m(d);
  for (const auto& [key, value] : doc["coeffs"].items()) {
    RankSet s = RankSet::from_key(key);
    if (!s.fits(d)) throw parse_error("coefficient f_" + key + " exceeds dimension " + std::to_string(d));
    m.add(s, detail::rational_from(value));
  }
  return m;
}

inline json to_json(const Verdict& v) {
  json j = {{"holds", v.holds}};
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

inline json to_json(const PropertyReport& r) {
  return {{"C", to_json(r.convex)}, {"L", to_json(r.log_convex)}, {"U", to_json(r.unimodal)}, {"B", to_json(r.barany)}};
}

inline json to_json(const CdPolynomial<Rational>& p) {
  json coeffs = json::object();
  for (const auto& [u, c] : p.terms) coeffs[u.letters()] = to_string(c);
  return {{"d", p.degree}, {"cd", to_string(p)}, {"coeffs", std::move(coeffs)}};
}

inline json to_json(const CandidateReport& r) {
  json ineqs = json::array();
  for (const auto& v : r.inequalities)
    ineqs.push_back({{"name", v.name}, {"value", to_string(v.value)}, {"satisfied", v.satisfied}});
  return {{"d", r.d},
          {"f", to_json(r.f)},
          {"euler", r.euler},
          {"gds", r.gds},
          {"battery_passes", r.battery_passes},
          {"inequalities", std::move(ineqs)},
          {"properties", to_json(r.properties)},
          {"f1_le_f2", r.rise_to_f2},
          {"flags", to_json(r.flags)["flags"]}};
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace flagvec::io
