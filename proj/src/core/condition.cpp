#include "evstore/core/condition.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "evstore/core/error.hpp"

namespace evstore {

const char* op_symbol(Op op) {
    switch (op) {
        case Op::eq: return "==";
        case Op::ge: return ">=";
        case Op::le: return "<=";
        case Op::gt: return ">";
        case Op::lt: return "<";
    }
    return "?";
}

std::optional<Op> parse_op(std::string_view symbol) {
    if (symbol == "==" || symbol == "=") return Op::eq;
    if (symbol == ">=") return Op::ge;
    if (symbol == "<=") return Op::le;
    if (symbol == ">") return Op::gt;
    if (symbol == "<") return Op::lt;
    return std::nullopt;
}

bool condition_matches(const Document& doc, const Condition& cond) {
    const FieldValue* stored = doc.find(cond.field);
    if (stored == nullptr) return false;
    if (!same_class(*stored, cond.value)) return false;
    const int c = order_compare(*stored, cond.value);
    switch (cond.op) {
        case Op::eq: return c == 0;
        case Op::ge: return c >= 0;
        case Op::le: return c <= 0;
        case Op::gt: return c > 0;
        case Op::lt: return c < 0;
    }
    return false;
}

std::vector<Document> filter_brute_force(const std::vector<Document>& docs,
                                         const std::vector<Condition>& conditions) {
    std::vector<Document> out;
    for (const auto& doc : docs) {
        const bool all = std::all_of(conditions.begin(), conditions.end(),
                                     [&](const Condition& c) { return condition_matches(doc, c); });
        if (all) out.push_back(doc);
    }
    return out;
}

std::vector<std::string> inequality_fields(std::span<const Condition> conditions) {
    std::vector<std::string> fields;
    for (const auto& c : conditions) {
        if (!c.is_inequality()) continue;
        if (std::find(fields.begin(), fields.end(), c.field) == fields.end()) {
            fields.push_back(c.field);
        }
    }
    return fields;
}

void validate_spec(const QuerySpec& spec) {
    std::map<std::string, int> lower_bounds;
    std::map<std::string, int> upper_bounds;
    for (const auto& c : spec.conditions) {
        if (c.field.empty()) raise(Errc::invalid_spec, "condition field name is empty");
        if (c.op == Op::ge || c.op == Op::gt) {
            if (++lower_bounds[c.field] > 1) {
                raise(Errc::invalid_spec, "more than one lower bound on field '" + c.field + "'");
            }
        } else if (c.op == Op::le || c.op == Op::lt) {
            if (++upper_bounds[c.field] > 1) {
                raise(Errc::invalid_spec, "more than one upper bound on field '" + c.field + "'");
            }
        }
    }
    if (spec.limit && *spec.limit == 0) raise(Errc::invalid_spec, "limit must be positive");
    if (spec.projection) {
        for (const auto& f : *spec.projection) {
            if (f.empty()) raise(Errc::invalid_spec, "projection field name is empty");
        }
    }
}

Document project(const Document& doc, const std::vector<std::string>& field_names) {
    Document out;
    out.key = doc.key;
    for (const auto& [name, value] : doc.fields) {
        if (std::find(field_names.begin(), field_names.end(), name) != field_names.end()) {
            out.fields.emplace_back(name, value);
        }
    }
    return out;
}

namespace {

FieldValue parse_literal(std::string_view text) {
    // quoted text stays text
    if (text.size() >= 2 && (text.front() == '"' || text.front() == '\'') &&
        text.back() == text.front()) {
        return make_text(std::string(text.substr(1, text.size() - 2)));
    }
    std::int64_t i = 0;
    auto [p1, e1] = std::from_chars(text.data(), text.data() + text.size(), i);
    if (e1 == std::errc() && p1 == text.data() + text.size()) return make_integer(i);
    double d = 0;
    auto [p2, e2] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (e2 == std::errc() && p2 == text.data() + text.size()) return make_number(d);
    return make_text(std::string(text));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::vector<Condition> parse_condition_list(std::string_view text) {
    std::vector<Condition> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view part = trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (part.empty()) {
            if (pos > text.size()) break;
            raise(Errc::invalid_spec, "empty condition in list");
        }
        // longest operators first so ">=" wins over ">"
        static constexpr std::string_view kOps[] = {"==", ">=", "<=", "=", ">", "<"};
        std::size_t op_at = std::string_view::npos;
        std::string_view op_sym;
        for (std::string_view sym : kOps) {
            const auto at = part.find(sym);
            if (at != std::string_view::npos && (op_at == std::string_view::npos || at < op_at ||
                                                 (at == op_at && sym.size() > op_sym.size()))) {
                op_at = at;
                op_sym = sym;
            }
        }
        if (op_at == std::string_view::npos) {
            raise(Errc::invalid_spec, "condition '" + std::string(part) + "' has no operator");
        }
        Condition c;
        c.field = std::string(trim(part.substr(0, op_at)));
        c.op = *parse_op(op_sym);
        c.value = parse_literal(trim(part.substr(op_at + op_sym.size())));
        if (c.field.empty()) raise(Errc::invalid_spec, "condition field name is empty");
        out.push_back(std::move(c));
        if (comma == text.size()) break;
    }
    return out;
}

std::string to_display_string(const Condition& cond) {
    return cond.field + " " + op_symbol(cond.op) + " " + to_display_string(cond.value);
}

} // namespace evstore
