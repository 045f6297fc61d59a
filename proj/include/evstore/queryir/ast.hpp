#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evstore/core/field_value.hpp"

namespace evstore::queryir {

/// One field in the query tree. A node has nested children XOR leaf
/// selections; argument names are unique per node.
struct FieldNode {
    std::string name;
    std::vector<std::pair<std::string, FieldValue>> args;
    std::vector<FieldNode> children;
    std::vector<std::string> selections;

    bool operator==(const FieldNode&) const = default;
};

struct QueryAst {
    FieldNode root;

    bool operator==(const QueryAst&) const = default;
};

/// Pretty-prints an AST back to query text; parse(to_text(ast)) is
/// structurally identical to ast.
std::string to_text(const QueryAst& ast);

} // namespace evstore::queryir
