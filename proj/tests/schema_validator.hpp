#pragma once

// Minimal JSON-schema validator covering the subset used by docs/schema:
// type, enum, required, properties, items, pattern.

#include <json.hpp>

#include <regex>
#include <string>

namespace schemacheck {

using json = nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    return false;
}

inline void validate(const json& value, const json& schema, const std::string& path,
                     std::string& error) {
    if (!error.empty()) return;
    if (schema.contains("type") && !type_matches(value, schema["type"])) {
        error = path + ": expected type " + schema["type"].get<std::string>();
        return;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema["enum"])
            if (e == value) hit = true;
        if (!hit) {
            error = path + ": value not in enum";
            return;
        }
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_match(value.get<std::string>(), re)) {
            error = path + ": pattern mismatch for '" + value.get<std::string>() + "'";
            return;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    error = path + ": missing required key " + key.get<std::string>();
                    return;
                }
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()))
                    validate(value[it.key()], it.value(), path + "." + it.key(), error);
    }
    if (value.is_array() && schema.contains("items")) {
        size_t i = 0;
        for (const auto& item : value)
            validate(item, schema["items"], path + "[" + std::to_string(i++) + "]", error);
    }
}

// empty string means valid
inline std::string check(const json& value, const json& schema) {
    std::string error;
    validate(value, schema, "$", error);
    return error;
}

}  // namespace schemacheck
