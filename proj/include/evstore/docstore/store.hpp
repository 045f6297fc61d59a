#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evstore/docstore/collection.hpp"

namespace evstore::docstore {

class DocStore {
public:
    /// Throws DuplicateCollection; the name must be non-empty.
    Collection& create_collection(std::string name);

    /// Throws NotFound.
    Collection& collection(std::string_view name);
    const Collection& collection(std::string_view name) const;

    bool has(std::string_view name) const { return collections_.contains(name); }
    std::vector<std::string> names() const;

private:
    std::map<std::string, Collection, std::less<>> collections_;
};

} // namespace evstore::docstore
