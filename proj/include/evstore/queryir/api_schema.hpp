#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "evstore/core/condition.hpp"
#include "evstore/queryir/ast.hpp"

namespace evstore::queryir {

enum class ArgType { integer, number, text };

/// Declares how one query argument turns into a storage condition, e.g.
/// latmin -> latitude >= value. Advisory arguments bind to no condition.
struct ArgDecl {
    ArgType type = ArgType::text;
    std::string condition_field; // empty: advisory only
    Op condition_op = Op::eq;
};

struct FieldDecl {
    std::map<std::string, ArgDecl> args;
    std::vector<std::string> children;   // allowed nested fields
    std::vector<std::string> selections; // selectable leaves
    std::size_t max_children = 1;
};

struct Violation {
    std::string kind;  // UnknownField, ArgTypeMismatch, ...
    std::string where; // e.g. "latitude.latmin"
    std::string detail;

    std::string str() const;
};

/// A strongly typed resolver API: every resolvable field with its argument
/// types, allowed children and selectable leaves.
struct ApiSchema {
    std::map<std::string, FieldDecl> fields;

    const FieldDecl* find(const std::string& name) const;
    void check_closed() const; // every declared child is itself declared
};

/// Checks names, argument types and nesting against the schema and
/// reports every violation, not just the first.
std::vector<Violation> validate(const QueryAst& ast, const ApiSchema& schema);

/// The charger API: resolvable fields latitude, longitude, name and type,
/// each accepting the full argument vocabulary (latmin, latmax, longmin,
/// longmax, name, type, num) so any of them can be nested as the root.
/// Each field's resolver applies only its own conditions; num is an
/// advisory expected-size hint.
ApiSchema charger_api();

} // namespace evstore::queryir
