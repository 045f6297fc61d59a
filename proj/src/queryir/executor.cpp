#include "evstore/queryir/executor.hpp"

#include <map>

#include "evstore/core/error.hpp"

namespace evstore::queryir {

namespace {

struct Chain {
    std::vector<const FieldNode*> nodes; // root first
    std::map<std::string, FieldValue> args; // merged from every node
};

Chain flatten(const QueryAst& ast) {
    Chain chain;
    const FieldNode* node = &ast.root;
    while (node != nullptr) {
        chain.nodes.push_back(node);
        for (const auto& [name, value] : node->args) chain.args.emplace(name, value);
        node = node->children.empty() ? nullptr : &node->children.front();
    }
    return chain;
}

/// Conditions the given field's resolver applies, drawn from the merged
/// argument bag by the schema's arg->condition bindings.
std::vector<Condition> conditions_for(const std::string& field, const FieldDecl& decl,
                                      const std::map<std::string, FieldValue>& args) {
    std::vector<Condition> out;
    for (const auto& [arg_name, arg_decl] : decl.args) {
        if (arg_decl.condition_field != field) continue;
        const auto it = args.find(arg_name);
        if (it == args.end()) continue;
        out.push_back({arg_decl.condition_field, arg_decl.condition_op, it->second});
    }
    return out;
}

void ensure_valid(const QueryAst& ast, const ApiSchema& schema) {
    const auto violations = validate(ast, schema);
    if (violations.empty()) return;
    std::string msg = "query failed validation: ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) msg += "; ";
        msg += violations[i].str();
    }
    raise(Errc::unvalidated_ast, msg);
}

} // namespace

std::vector<ResolverStep> explain(const QueryAst& ast, const ApiSchema& schema) {
    ensure_valid(ast, schema);
    const Chain chain = flatten(ast);
    std::vector<ResolverStep> steps;
    steps.reserve(chain.nodes.size());
    for (std::size_t i = 0; i < chain.nodes.size(); ++i) {
        const FieldNode* node = chain.nodes[i];
        const FieldDecl* decl = schema.find(node->name);
        steps.push_back({node->name,
                         i == 0 ? ResolverKind::backend_query : ResolverKind::filter,
                         conditions_for(node->name, *decl, chain.args)});
    }
    return steps;
}

ExecuteResult execute(const QueryAst& ast, const ApiSchema& schema,
                      const docstore::Collection& backend) {
    ensure_valid(ast, schema);
    const Chain chain = flatten(ast);

    ExecuteResult result;
    std::vector<Document> current;
    for (std::size_t i = 0; i < chain.nodes.size(); ++i) {
        const FieldNode* node = chain.nodes[i];
        const FieldDecl* decl = schema.find(node->name);
        const auto conditions = conditions_for(node->name, *decl, chain.args);
        if (i == 0) {
            QuerySpec spec;
            spec.conditions = conditions;
            auto query_result = backend.query(spec);
            current = std::move(query_result.docs);
            result.stats = query_result.stats;
        } else {
            current = filter_brute_force(current, conditions);
        }
        result.levels.push_back({node->name, current.size()});
    }

    const std::vector<std::string>& selections = chain.nodes.back()->selections;
    result.docs.reserve(current.size());
    for (const auto& doc : current) result.docs.push_back(project(doc, selections));
    return result;
}

} // namespace evstore::queryir
