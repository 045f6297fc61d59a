#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evstore/core/condition.hpp"
#include "evstore/core/document.hpp"
#include "evstore/core/scan_stats.hpp"
#include "evstore/docstore/collection.hpp"
#include "evstore/queryir/api_schema.hpp"
#include "evstore/queryir/ast.hpp"

namespace evstore::queryir {

enum class ResolverKind { backend_query, filter };

struct ResolverStep {
    std::string field;
    ResolverKind kind;
    std::vector<Condition> conditions;
};

struct LevelCount {
    std::string field;
    std::size_t count;
};

struct ExecuteResult {
    std::vector<Document> docs; // leaf selections already applied
    std::vector<LevelCount> levels;
    ScanStats stats;
};

/// The resolver chain as it will run: the root is always one backend
/// query, every descendant only filters its parent's result set.
std::vector<ResolverStep> explain(const QueryAst& ast, const ApiSchema& schema);

/// Runs the chain against a document collection. The root resolver issues
/// ONE backend query with the root field's own conditions (honoring the
/// single-inequality rule); each child resolver filters the inherited set.
/// Throws UnvalidatedAst when the query does not validate; backend errors
/// propagate.
ExecuteResult execute(const QueryAst& ast, const ApiSchema& schema,
                      const docstore::Collection& backend);

} // namespace evstore::queryir
