#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evstore/relstore/table.hpp"

namespace evstore::relstore {

class RelStore {
public:
    /// Throws DuplicateTable or InvalidSchema.
    Table& create_table(std::string name, Schema schema);

    /// Throws NotFound.
    Table& table(std::string_view name);
    const Table& table(std::string_view name) const;

    bool has(std::string_view name) const { return tables_.contains(name); }
    std::vector<std::string> names() const;

private:
    std::map<std::string, Table, std::less<>> tables_;
};

/// The charger table schema used throughout the workbench.
Schema charger_schema(bool with_geohash = false);

} // namespace evstore::relstore
