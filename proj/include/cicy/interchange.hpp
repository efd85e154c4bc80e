#pragma once

// JSON form of resolutions and classification tables.
//
//   {"schema": 1,
//    "ambient": {"dim": N, "degrees": [d1, ...]},
//    "terms": [[a, ...], ...],          term 0 first, each sorted descending
//    "target": "curve_ideal" | "bundle" | "other"}

#include "cicy/classify.hpp"
#include "cicy/core_model.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cicy {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline int require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

inline std::vector<int> require_int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of integers");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(require_int(v, where));
  return out;
}

}  // namespace detail

inline Json to_json(const CompleteIntersection& v) {
  return Json{{"dim", v.ambient_dim()}, {"degrees", v.degrees()}};
}

inline CompleteIntersection ambient_from_json(const Json& j) {
  const int dim = detail::require_int(detail::require_field(j, "dim", "ambient"), "ambient.dim");
  auto degrees = detail::require_int_list(detail::require_field(j, "degrees", "ambient"), "ambient.degrees");
  try {
    return CompleteIntersection(dim, std::move(degrees));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("ambient: ") + e.what());
  }
}

inline Json to_json(const GradedFreeModule& m) { return Json(m.twists()); }

/// Canonical interchange document; terms are emitted sorted descending.
inline Json to_json(const FreeResolution& res) {
  Json terms = Json::array();
  for (const auto& t : res.terms()) terms.push_back(to_json(t));
  return Json{{"schema", kSchemaVersion},
              {"ambient", to_json(res.ambient())},
              {"terms", terms},
              {"target", std::string(to_string(res.target()))}};
}

/// Parses and validates an interchange document. Structural problems raise
/// ParseError; well-formed documents that violate resolution invariants raise
/// the library's own errors.
inline FreeResolution resolution_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("resolution: expected a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw ParseError("resolution: unsupported schema " + j.at("schema").dump());
  }
  const CompleteIntersection ambient = ambient_from_json(detail::require_field(j, "ambient", "resolution"));
  const Json& terms = detail::require_field(j, "terms", "resolution");
  if (!terms.is_array()) throw ParseError("resolution.terms: expected a list");
  std::vector<GradedFreeModule> modules;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    modules.emplace_back(detail::require_int_list(terms[i], "resolution.terms[" + std::to_string(i) + "]"));
  }
  const Json& target = detail::require_field(j, "target", "resolution");
  if (!target.is_string()) throw ParseError("resolution.target: expected a string");
  return FreeResolution(ambient, std::move(modules), target_kind_from_string(target.get<std::string>()));
}

inline Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

inline FreeResolution read_resolution_file(const std::string& path) { return resolution_from_json(read_json_file(path)); }

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(2) << "\n";
}

inline Json to_json(const C2Range& r) {
  Json j{{"lower", r.lower ? Json(*r.lower) : Json(nullptr)},
         {"upper", r.upper},
         {"even_only", r.even_only},
         {"lower_source", r.lower_source}};
  if (r.lower) j["values"] = r.values();
  return j;
}

inline Json to_json(const ClassificationEntry& e) {
  Json trace = Json::array();
  for (const auto& s : e.derivation) trace.push_back(Json{{"op", s.op}, {"detail", s.detail}});
  Json existence{{"kind", std::string(to_string(e.existence.kind))}};
  if (!e.existence.exceptions.empty()) existence["exceptions"] = e.existence.exceptions;
  if (!e.existence.note.empty()) existence["note"] = e.existence.note;
  return Json{{"c1", e.c1}, {"c2", to_json(e.c2)}, {"derivation", trace}, {"rules", e.rules}, {"existence", existence}};
}

inline Json classification_to_json(const Cicy& x, const std::vector<ClassificationEntry>& entries) {
  Json rows = Json::array();
  for (const auto& e : entries) rows.push_back(to_json(e));
  return Json{{"schema", kSchemaVersion},
              {"cicy", x.name()},
              {"type", x.degrees()},
              {"r", x.r()},
              {"k", x.k()},
              {"rows", rows}};
}

}  // namespace cicy
