#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evstore/core/condition.hpp"
#include "evstore/core/document.hpp"
#include "evstore/core/scan_stats.hpp"

namespace evstore::relstore {

enum class ColumnType { text, number, integer };

const char* column_type_name(ColumnType t);
ColumnType parse_column_type(std::string_view name); // throws InvalidSchema

struct Column {
    std::string name;
    ColumnType type = ColumnType::text;
    bool required = false;
};

struct Schema {
    std::vector<Column> columns;
    std::string primary_key;

    const Column* find(std::string_view name) const;
    void validate() const; // throws InvalidSchema
};

/// Rows are represented as documents (key = primary-key text form) so the
/// shared predicate evaluator applies unchanged.
using Row = Document;

/// A schema-enforced table. No secondary indexes exist: every select is a
/// full scan except a lone primary-key equality, which resolves by key
/// lookup. Same readers-or-one-writer contract as the document engine.
class Table {
public:
    Table(std::string name, Schema schema);

    const std::string& name() const { return name_; }
    const Schema& schema() const { return schema_; }
    std::size_t size() const { return rows_.size(); }

    /// Throws SchemaViolation (naming column and reason) or DuplicateKey;
    /// a rejected row leaves the table unchanged.
    ScanStats insert_row(const Row& row);

    struct SelectResult {
        std::vector<Row> rows;
        ScanStats stats;
    };

    /// Any number of inequality columns. rows_scanned == row count for a
    /// full scan, 1 for the primary-key fast path. Throws UnknownColumn.
    SelectResult select(const std::vector<Condition>& conditions) const;

    /// All-or-nothing update of one row. Throws NotFound, SchemaViolation.
    ScanStats update_row(const FieldValue& pk, const std::vector<Document::Field>& changed);

    SelectResult read_all() const;

private:
    void check_row(const Row& row) const;
    void check_column_value(const std::string& column, const FieldValue& value) const;
    Row normalize(const Row& row) const;

    std::string name_;
    Schema schema_;
    std::map<FieldValue, Row, OrderLess> rows_; // primary-key order
};

} // namespace evstore::relstore
