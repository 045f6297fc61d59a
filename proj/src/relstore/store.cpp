#include "evstore/relstore/store.hpp"

#include "evstore/core/error.hpp"

namespace evstore::relstore {

Table& RelStore::create_table(std::string name, Schema schema) {
    if (name.empty()) raise(Errc::invalid_value, "table name is empty");
    if (tables_.contains(name)) {
        raise(Errc::duplicate_table, "table '" + name + "' already exists");
    }
    auto [it, ok] = tables_.emplace(name, Table(name, std::move(schema)));
    return it->second;
}

Table& RelStore::table(std::string_view name) {
    const auto it = tables_.find(name);
    if (it == tables_.end()) raise(Errc::not_found, "no table '" + std::string(name) + "'");
    return it->second;
}

const Table& RelStore::table(std::string_view name) const {
    const auto it = tables_.find(name);
    if (it == tables_.end()) raise(Errc::not_found, "no table '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> RelStore::names() const {
    std::vector<std::string> out;
    out.reserve(tables_.size());
    for (const auto& [name, t] : tables_) out.push_back(name);
    return out;
}

Schema charger_schema(bool with_geohash) {
    Schema s;
    s.columns = {
        {"id", ColumnType::integer, true},    {"name", ColumnType::text, true},
        {"address", ColumnType::text, true},  {"latitude", ColumnType::number, true},
        {"longitude", ColumnType::number, true}, {"type", ColumnType::text, true},
    };
    if (with_geohash) s.columns.push_back({"geohash", ColumnType::text, false});
    s.primary_key = "id";
    return s;
}

} // namespace evstore::relstore
