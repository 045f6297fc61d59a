#include "evstore/docstore/store.hpp"

#include "evstore/core/error.hpp"

namespace evstore::docstore {

Collection& DocStore::create_collection(std::string name) {
    if (name.empty()) raise(Errc::invalid_value, "collection name is empty");
    if (collections_.contains(name)) {
        raise(Errc::duplicate_collection, "collection '" + name + "' already exists");
    }
    auto [it, ok] = collections_.emplace(name, Collection(name));
    return it->second;
}

Collection& DocStore::collection(std::string_view name) {
    const auto it = collections_.find(name);
    if (it == collections_.end()) {
        raise(Errc::not_found, "no collection '" + std::string(name) + "'");
    }
    return it->second;
}

const Collection& DocStore::collection(std::string_view name) const {
    const auto it = collections_.find(name);
    if (it == collections_.end()) {
        raise(Errc::not_found, "no collection '" + std::string(name) + "'");
    }
    return it->second;
}

std::vector<std::string> DocStore::names() const {
    std::vector<std::string> out;
    out.reserve(collections_.size());
    for (const auto& [name, c] : collections_) out.push_back(name);
    return out;
}

} // namespace evstore::docstore
