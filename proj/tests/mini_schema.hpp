#pragma once

// Validator for the JSON-Schema subset the shipped schemas use: type (name or
// list of names), required, properties, additionalProperties (as a schema for
// object map values), items (single schema), minItems/maxItems, enum, oneOf.

#include <json.hpp>

#include <fstream>
#include <string>

namespace charone::testing {

inline bool type_matches(const nlohmann::json& value, const std::string& name) {
    if (name == "object") return value.is_object();
    if (name == "array") return value.is_array();
    if (name == "string") return value.is_string();
    if (name == "integer") return value.is_number_integer();
    if (name == "number") return value.is_number();
    if (name == "boolean") return value.is_boolean();
    if (name == "null") return value.is_null();
    return false;
}

inline bool validates(const nlohmann::json& value, const nlohmann::json& schema) {
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& sub : schema["oneOf"])
            if (validates(value, sub)) ++hits;
        if (hits != 1) return false;
    }
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        if (t.is_string()) {
            if (!type_matches(value, t.get<std::string>())) return false;
        } else {
            bool any = false;
            for (const auto& name : t) any = any || type_matches(value, name.get<std::string>());
            if (!any) return false;
        }
    }
    if (schema.contains("enum")) {
        bool any = false;
        for (const auto& lit : schema["enum"]) any = any || (value == lit);
        if (!any) return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validates(value.at(key), sub)) return false;
        if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object()) {
            for (const auto& [key, item] : value.items()) {
                if (schema.contains("properties") && schema["properties"].contains(key)) continue;
                if (!validates(item, schema["additionalProperties"])) return false;
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
            return false;
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
            return false;
        if (schema.contains("items") && schema["items"].is_object())
            for (const auto& item : value)
                if (!validates(item, schema["items"])) return false;
    }
    return true;
}

inline nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(CHARONE_SCHEMA_DIR) + "/" + name);
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace charone::testing
