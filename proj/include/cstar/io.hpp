#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "cstar/blowup.hpp"

namespace cstar {

// Malformed input document (syntax, missing/unknown fields, wrong types).
// Value-range violations surface as std::invalid_argument from the
// constructors; both map to the usage exit code in the command-line tool.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One parsed input document:
//
//   {"kind": "moduli",    "genus": 0, "k": 2, "chains": [[3], [2,2]]}
//   {"kind": "stargraph", "genus": 0, "center_weight": -2, "chains": [[3]]}
//   {"kind": "bamboo",    "weights": [-2, 0, 2]}
//
// Exactly the fields of the kind are allowed; integers must be JSON integers.
struct InputDocument {
  enum class Kind { Moduli, Star, Bamboo };
  Kind kind;
  std::optional<ModuliData> moduli;
  std::optional<StarGraph> star;
  std::optional<Bamboo> bamboo;
};

namespace detail {

inline std::int64_t require_int(const nlohmann::json& j,
                                const std::string& field) {
  if (!j.contains(field))
    throw ParseError("missing field \"" + field + "\"");
  if (!j.at(field).is_number_integer())
    throw ParseError("field \"" + field + "\" must be an integer");
  return j.at(field).get<std::int64_t>();
}

inline std::vector<std::int64_t> int_array(const nlohmann::json& j,
                                           const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw ParseError(what + " entries must be integers");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

inline std::vector<Chain> require_chains(const nlohmann::json& j) {
  if (!j.contains("chains")) throw ParseError("missing field \"chains\"");
  if (!j.at("chains").is_array())
    throw ParseError("field \"chains\" must be an array of arrays");
  std::vector<Chain> out;
  for (const auto& c : j.at("chains"))
    out.emplace_back(int_array(c, "chain"));
  return out;
}

inline void only_fields(const nlohmann::json& j,
                        const std::set<std::string>& allowed) {
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw ParseError("unknown field \"" + item.key() + "\"");
}

}  // namespace detail

inline InputDocument parse_input(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("missing string field \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();

  InputDocument doc;
  if (kind == "moduli") {
    detail::only_fields(j, {"kind", "genus", "k", "chains"});
    doc.kind = InputDocument::Kind::Moduli;
    doc.moduli = ModuliData(detail::require_int(j, "genus"),
                            detail::require_int(j, "k"),
                            detail::require_chains(j));
  } else if (kind == "stargraph") {
    detail::only_fields(j, {"kind", "genus", "center_weight", "chains"});
    doc.kind = InputDocument::Kind::Star;
    doc.star = StarGraph(detail::require_int(j, "genus"),
                         detail::require_int(j, "center_weight"),
                         detail::require_chains(j));
  } else if (kind == "bamboo") {
    detail::only_fields(j, {"kind", "weights"});
    doc.kind = InputDocument::Kind::Bamboo;
    if (!j.contains("weights")) throw ParseError("missing field \"weights\"");
    Bamboo b;
    b.weights = detail::int_array(j.at("weights"), "weights");
    if (b.weights.empty()) throw ParseError("weights must be non-empty");
    doc.bamboo = std::move(b);
  } else {
    throw ParseError("unknown kind \"" + kind + "\"");
  }
  return doc;
}

}  // namespace cstar
