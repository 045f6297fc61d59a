#include "evstore/queryir/api_schema.hpp"

#include <algorithm>

#include "evstore/core/error.hpp"

namespace evstore::queryir {

std::string Violation::str() const {
    std::string s = kind + " " + where;
    if (!detail.empty()) s += " (" + detail + ")";
    return s;
}

const FieldDecl* ApiSchema::find(const std::string& name) const {
    const auto it = fields.find(name);
    return it == fields.end() ? nullptr : &it->second;
}

void ApiSchema::check_closed() const {
    for (const auto& [name, decl] : fields) {
        for (const auto& child : decl.children) {
            if (!fields.contains(child)) {
                raise(Errc::invalid_schema,
                      "field '" + name + "' references undeclared child '" + child + "'");
            }
        }
    }
}

namespace {

bool arg_type_matches(ArgType type, const FieldValue& value) {
    switch (type) {
        case ArgType::integer: return std::holds_alternative<std::int64_t>(value);
        case ArgType::number: return is_numeric(value);
        case ArgType::text: return is_text(value);
    }
    return false;
}

const char* arg_type_name(ArgType type) {
    switch (type) {
        case ArgType::integer: return "integer";
        case ArgType::number: return "number";
        case ArgType::text: return "text";
    }
    return "?";
}

void validate_node(const FieldNode& node, const ApiSchema& schema,
                   std::vector<std::string>& seen_args, std::vector<Violation>& out) {
    const FieldDecl* decl = schema.find(node.name);
    if (decl == nullptr) {
        out.push_back({"UnknownField", node.name, ""});
        return;
    }
    for (const auto& [arg, value] : node.args) {
        const auto it = decl->args.find(arg);
        if (it == decl->args.end()) {
            out.push_back({"UnknownArg", node.name + "." + arg, ""});
            continue;
        }
        if (!arg_type_matches(it->second.type, value)) {
            out.push_back({"ArgTypeMismatch", node.name + "." + arg,
                           std::string("expected ") + arg_type_name(it->second.type)});
        }
        if (std::find(seen_args.begin(), seen_args.end(), arg) != seen_args.end()) {
            out.push_back({"DuplicateArg", node.name + "." + arg, "already given elsewhere"});
        } else {
            seen_args.push_back(arg);
        }
    }
    if (node.children.size() > decl->max_children) {
        std::string names;
        for (const auto& c : node.children) {
            if (!names.empty()) names += ", ";
            names += c.name;
        }
        out.push_back({"SiblingFields", node.name, names});
    }
    for (const auto& child : node.children) {
        if (schema.find(child.name) != nullptr &&
            std::find(decl->children.begin(), decl->children.end(), child.name) ==
                decl->children.end()) {
            out.push_back({"UnknownChild", node.name + "." + child.name, ""});
        }
        validate_node(child, schema, seen_args, out);
    }
    for (const auto& sel : node.selections) {
        if (std::find(decl->selections.begin(), decl->selections.end(), sel) ==
            decl->selections.end()) {
            out.push_back({"UnknownSelection", node.name + "." + sel, ""});
        }
    }
}

} // namespace

std::vector<Violation> validate(const QueryAst& ast, const ApiSchema& schema) {
    std::vector<Violation> out;
    std::vector<std::string> seen_args;
    validate_node(ast.root, schema, seen_args, out);
    return out;
}

ApiSchema charger_api() {
    const std::vector<std::string> resolvable = {"latitude", "longitude", "name", "type"};
    const std::vector<std::string> leaves = {"id",       "name",      "address",
                                             "latitude", "longitude", "type"};
    std::map<std::string, ArgDecl> args = {
        {"num", {ArgType::integer, "", Op::eq}},
        {"latmin", {ArgType::number, "latitude", Op::ge}},
        {"latmax", {ArgType::number, "latitude", Op::le}},
        {"longmin", {ArgType::number, "longitude", Op::ge}},
        {"longmax", {ArgType::number, "longitude", Op::le}},
        {"name", {ArgType::text, "name", Op::eq}},
        {"type", {ArgType::text, "type", Op::eq}},
    };
    ApiSchema schema;
    for (const auto& field : resolvable) {
        FieldDecl decl;
        decl.args = args;
        for (const auto& other : resolvable) {
            if (other != field) decl.children.push_back(other);
        }
        decl.selections = leaves;
        decl.max_children = 1; // the charger API is a pure chain
        schema.fields.emplace(field, std::move(decl));
    }
    schema.check_closed();
    return schema;
}

} // namespace evstore::queryir
