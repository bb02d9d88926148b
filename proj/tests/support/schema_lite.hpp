#ifndef FIBERFIELD_TESTS_SCHEMA_LITE_HPP
#define FIBERFIELD_TESTS_SCHEMA_LITE_HPP

// Minimal JSON-schema checker covering the subset the shipped schema uses:
// type, enum, required, properties, additionalProperties (bool), items.

#include <json.hpp>
#include <string>

namespace fiberfield::testing {

using nlohmann::json;

inline bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

// Returns an error description, empty on success.
inline std::string validate_schema(const json& value, const json& schema,
                                   const std::string& path = "$") {
  if (schema.contains("type") && !type_matches(value, schema.at("type").get<std::string>()))
    return path + ": expected type " + schema.at("type").get<std::string>();
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema.at("enum")) ok = ok || e == value;
    if (!ok) return path + ": value not in enum";
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema.at("required"))
        if (!value.contains(k.get<std::string>()))
          return path + ": missing required key '" + k.get<std::string>() + "'";
    const json props = schema.value("properties", json::object());
    for (const auto& [k, v] : value.items()) {
      if (props.contains(k)) {
        const std::string err = validate_schema(v, props.at(k), path + "." + k);
        if (!err.empty()) return err;
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties").is_boolean() &&
                 !schema.at("additionalProperties").get<bool>()) {
        return path + ": unexpected key '" + k + "'";
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& e : value) {
      const std::string err =
          validate_schema(e, schema.at("items"), path + "[" + std::to_string(i++) + "]");
      if (!err.empty()) return err;
    }
  }
  return "";
}

}  // namespace fiberfield::testing

#endif
