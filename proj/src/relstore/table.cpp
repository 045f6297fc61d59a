#include "evstore/relstore/table.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "evstore/core/error.hpp"

namespace evstore::relstore {

const char* column_type_name(ColumnType t) {
    switch (t) {
        case ColumnType::text: return "text";
        case ColumnType::number: return "number";
        case ColumnType::integer: return "integer";
    }
    return "?";
}

ColumnType parse_column_type(std::string_view name) {
    if (name == "text") return ColumnType::text;
    if (name == "number") return ColumnType::number;
    if (name == "integer") return ColumnType::integer;
    raise(Errc::invalid_schema, "unknown column type '" + std::string(name) + "'");
}

const Column* Schema::find(std::string_view name) const {
    for (const auto& c : columns) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

void Schema::validate() const {
    if (columns.empty()) raise(Errc::invalid_schema, "schema has no columns");
    std::set<std::string_view> seen;
    for (const auto& c : columns) {
        if (c.name.empty()) raise(Errc::invalid_schema, "column name is empty");
        if (!seen.insert(c.name).second) {
            raise(Errc::invalid_schema, "duplicate column '" + c.name + "'");
        }
    }
    const Column* pk = find(primary_key);
    if (pk == nullptr) {
        raise(Errc::invalid_schema, "primary key '" + primary_key + "' is not a column");
    }
    if (!pk->required) {
        raise(Errc::invalid_schema, "primary key column must be required");
    }
}

Table::Table(std::string name, Schema schema)
    : name_(std::move(name)), schema_(std::move(schema)) {
    schema_.validate();
}

void Table::check_column_value(const std::string& column, const FieldValue& value) const {
    const Column* col = schema_.find(column);
    if (col == nullptr) {
        raise(Errc::schema_violation, column + ": unknown column");
    }
    switch (col->type) {
        case ColumnType::text:
            if (!is_text(value)) raise(Errc::schema_violation, column + ": type (expected text)");
            break;
        case ColumnType::integer:
            if (!std::holds_alternative<std::int64_t>(value)) {
                raise(Errc::schema_violation, column + ": type (expected integer)");
            }
            break;
        case ColumnType::number:
            // an integer widens exactly into a number column
            if (!is_numeric(value)) {
                raise(Errc::schema_violation, column + ": type (expected number)");
            }
            if (const auto* d = std::get_if<double>(&value); d && !std::isfinite(*d)) {
                raise(Errc::schema_violation, column + ": type (number must be finite)");
            }
            break;
    }
}

void Table::check_row(const Row& row) const {
    for (const auto& [name, value] : row.fields) {
        check_column_value(name, value);
    }
    for (const auto& col : schema_.columns) {
        if (col.required && row.find(col.name) == nullptr) {
            raise(Errc::schema_violation, col.name + ": missing");
        }
    }
}

Row Table::normalize(const Row& row) const {
    Row out = row;
    out.key = to_display_string(*row.find(schema_.primary_key));
    return out;
}

ScanStats Table::insert_row(const Row& row) {
    check_row(row);
    const FieldValue& pk = *row.find(schema_.primary_key);
    if (rows_.contains(pk)) {
        raise(Errc::duplicate_key,
              "primary key " + to_display_string(pk) + " already present");
    }
    rows_.emplace(pk, normalize(row));
    return {};
}

Table::SelectResult Table::select(const std::vector<Condition>& conditions) const {
    for (const auto& cond : conditions) {
        if (schema_.find(cond.field) == nullptr) {
            raise(Errc::unknown_column, "unknown column '" + cond.field + "'");
        }
    }
    QuerySpec spec;
    spec.conditions = conditions;
    validate_spec(spec);

    SelectResult result;
    // lone primary-key equality resolves by key lookup
    if (conditions.size() == 1 && conditions.front().op == Op::eq &&
        conditions.front().field == schema_.primary_key) {
        result.stats.rows_scanned = 1;
        result.stats.docs_examined = 1;
        const auto it = rows_.find(conditions.front().value);
        if (it != rows_.end()) result.rows.push_back(it->second);
        return result;
    }

    for (const auto& [pk, row] : rows_) {
        ++result.stats.rows_scanned;
        ++result.stats.docs_examined;
        const bool all = std::all_of(conditions.begin(), conditions.end(),
                                     [&](const Condition& c) { return condition_matches(row, c); });
        if (all) result.rows.push_back(row);
    }
    return result;
}

ScanStats Table::update_row(const FieldValue& pk, const std::vector<Document::Field>& changed) {
    auto it = rows_.find(pk);
    if (it == rows_.end()) {
        raise(Errc::not_found, "no row with primary key " + to_display_string(pk));
    }
    // validate everything before touching the row: all or nothing
    Row updated = it->second;
    for (const auto& [name, value] : changed) {
        check_column_value(name, value);
        updated.set(name, value);
    }
    check_row(updated);
    const FieldValue& new_pk = *updated.find(schema_.primary_key);
    if (order_compare(new_pk, it->first) != 0) {
        if (rows_.contains(new_pk)) {
            raise(Errc::duplicate_key,
                  "primary key " + to_display_string(new_pk) + " already present");
        }
        rows_.erase(it);
        rows_.emplace(new_pk, normalize(updated));
    } else {
        it->second = normalize(updated);
    }
    ScanStats stats;
    stats.rows_scanned = 1;
    stats.docs_examined = 1;
    return stats;
}

Table::SelectResult Table::read_all() const {
    SelectResult result;
    result.rows.reserve(rows_.size());
    for (const auto& [pk, row] : rows_) result.rows.push_back(row);
    result.stats.rows_scanned = rows_.size();
    result.stats.docs_examined = rows_.size();
    return result;
}

} // namespace evstore::relstore
