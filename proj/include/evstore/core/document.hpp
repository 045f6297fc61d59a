#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evstore/core/field_value.hpp"

namespace evstore {

/// A schemaless document: a non-empty key plus fields in insertion order.
struct Document {
    using Field = std::pair<std::string, FieldValue>;

    std::string key;
    std::vector<Field> fields;

    const FieldValue* find(std::string_view name) const {
        for (const auto& [n, v] : fields) {
            if (n == name) return &v;
        }
        return nullptr;
    }

    bool has(std::string_view name) const { return find(name) != nullptr; }

    /// Replaces an existing field in place or appends a new one.
    void set(std::string name, FieldValue value) {
        for (auto& [n, v] : fields) {
            if (n == name) {
                v = std::move(value);
                return;
            }
        }
        fields.emplace_back(std::move(name), std::move(value));
    }

    bool operator==(const Document&) const = default;
};

/// Keeps only the named fields, in the order they appear in the document.
Document project(const Document& doc, const std::vector<std::string>& field_names);

} // namespace evstore
