#pragma once

// Minimal JSON-Schema checker for the subset the report schema uses: type,
// required, properties, items, enum and local $ref into #/definitions.

#include <string>
#include <vector>

#include "json.hpp"

namespace schema {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline void validate_at(const json& value, const json& node, const json& root, const std::string& path,
                        std::vector<std::string>& errors) {
    if (node.contains("$ref")) {
        std::string ref = node["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) == 0) {
            validate_at(value, root["definitions"][ref.substr(prefix.size())], root, path, errors);
            return;
        }
        errors.push_back(path + ": unsupported $ref " + ref);
        return;
    }
    if (node.contains("type")) {
        const json& t = node["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const json& option : t)
                if (type_matches(value, option.get<std::string>())) ok = true;
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch, expected " + t.dump());
            return;
        }
    }
    if (node.contains("enum")) {
        bool ok = false;
        for (const json& option : node["enum"])
            if (value == option) ok = true;
        if (!ok) errors.push_back(path + ": value " + value.dump() + " not in enum");
    }
    if (value.is_object()) {
        if (node.contains("required"))
            for (const json& key : node["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required key " + key.get<std::string>());
        if (node.contains("properties"))
            for (auto it = node["properties"].begin(); it != node["properties"].end(); ++it)
                if (value.contains(it.key()))
                    validate_at(value[it.key()], it.value(), root, path + "/" + it.key(), errors);
    }
    if (value.is_array() && node.contains("items")) {
        size_t i = 0;
        for (const json& element : value) {
            validate_at(element, node["items"], root, path + "/" + std::to_string(i), errors);
            ++i;
        }
    }
}

inline std::vector<std::string> validate(const json& value, const json& schema_root) {
    std::vector<std::string> errors;
    validate_at(value, schema_root, schema_root, "", errors);
    return errors;
}

} // namespace schema
