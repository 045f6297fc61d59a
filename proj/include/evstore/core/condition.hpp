#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evstore/core/document.hpp"
#include "evstore/core/field_value.hpp"

namespace evstore {

enum class Op { eq, ge, le, gt, lt };

const char* op_symbol(Op op);
std::optional<Op> parse_op(std::string_view symbol);

/// One conjunct of a query: field <op> value.
struct Condition {
    std::string field;
    Op op = Op::eq;
    FieldValue value;

    bool is_inequality() const { return op != Op::eq; }
};

/// A conjunctive query over one collection or table.
struct QuerySpec {
    std::vector<Condition> conditions;
    std::optional<std::size_t> limit;
    std::optional<std::vector<std::string>> projection;
};

/// True iff the document has the field and its value satisfies the
/// operator. A missing field or a text/numeric class mismatch is false,
/// never an error.
bool condition_matches(const Document& doc, const Condition& cond);

/// The oracle every engine is differentially tested against: keeps the
/// documents matching every condition, preserving input order.
std::vector<Document> filter_brute_force(const std::vector<Document>& docs,
                                         const std::vector<Condition>& conditions);

/// Distinct fields carrying inequality operators, in first-appearance order.
std::vector<std::string> inequality_fields(std::span<const Condition> conditions);

/// Structural checks: non-empty field names, positive limit, at most one
/// lower (GE/GT) and one upper (LE/LT) bound per field. Throws InvalidSpec.
void validate_spec(const QuerySpec& spec);

/// Parses "latitude>=47.5,name=Howard" into conditions. Values parse as
/// integer, then float, then text. Throws InvalidSpec on malformed input.
std::vector<Condition> parse_condition_list(std::string_view text);

std::string to_display_string(const Condition& cond);

} // namespace evstore
