#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evstore/core/condition.hpp"
#include "evstore/core/document.hpp"
#include "evstore/core/scan_stats.hpp"
#include "evstore/docstore/field_index.hpp"

namespace evstore::docstore {

inline constexpr std::size_t kMaxDocumentBytes = 1 << 20; // 1 MiB serialized

/// A schemaless collection with a hash primary index and an automatic
/// sorted secondary index per field.
///
/// Concurrency contract: any number of concurrent readers OR one writer;
/// no internal locking. The bench harness drives it single-threaded.
class Collection {
public:
    explicit Collection(std::string name) : name_(std::move(name)) {}

    Collection(const Collection&) = delete;
    Collection& operator=(const Collection&) = delete;
    Collection(Collection&&) = default;
    Collection& operator=(Collection&&) = default;

    const std::string& name() const { return name_; }
    std::size_t size() const { return order_.size(); }

    /// Indexes every field of the document. Throws DuplicateKey,
    /// DocumentTooLarge, InvalidValue.
    ScanStats insert(Document doc);

    /// Validates the whole batch, then builds each field index with one
    /// sort instead of per-document searches. index_comparisons stays 0.
    ScanStats bulk_load(std::vector<Document> docs);

    /// Primary-key read: docs_examined is 1 on a hit regardless of
    /// collection size. Throws NotFound on a miss.
    std::pair<Document, ScanStats> get(std::string_view key) const;

    /// Non-throwing variant; docs_examined is 0 on a miss.
    std::pair<const Document*, ScanStats> try_get(std::string_view key) const;

    /// Replaces or adds the given fields (schemaless) and maintains every
    /// affected index. Throws NotFound, DocumentTooLarge.
    ScanStats update(std::string_view key, const std::vector<Document::Field>& changed_fields);

    struct QueryResult {
        std::vector<Document> docs;
        ScanStats stats;
    };

    /// Single-inequality-field query: the one inequality field (or the
    /// first equality field) is resolved through its index; remaining
    /// conditions are tested per candidate. docs_examined counts index
    /// entries in range before that intersection. Throws
    /// MultipleInequalityFields when inequalities span two or more fields;
    /// an unknown field is not an error, just an empty result.
    QueryResult query(const QuerySpec& spec) const;

    /// All documents in insertion order; docs_examined == size().
    QueryResult read_all() const;

    /// Index introspection for invariant checks; nullptr if the field has
    /// never been seen.
    const FieldIndex* index(std::string_view field) const;
    std::vector<std::string> indexed_fields() const;

private:
    const Document* stored(std::string_view key) const;

    std::string name_;
    std::unordered_map<std::string, Document> docs_;
    std::vector<const Document*> order_; // insertion order
    std::map<std::string, FieldIndex, std::less<>> indices_;
};

} // namespace evstore::docstore
