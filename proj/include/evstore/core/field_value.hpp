#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace evstore {

/// A single document field: text, 64-bit float, or signed 64-bit integer.
/// Number variants are always finite; text is UTF-8.
using FieldValue = std::variant<std::int64_t, double, std::string>;

FieldValue make_integer(std::int64_t v);
FieldValue make_number(double v); // throws InvalidValue on NaN/inf
FieldValue make_text(std::string v);

inline bool is_text(const FieldValue& v) { return std::holds_alternative<std::string>(v); }
inline bool is_numeric(const FieldValue& v) { return !is_text(v); }

/// Numeric value widened to double (valid only when is_numeric).
double numeric_value(const FieldValue& v);

/// Exact three-way comparison of an integer against a finite double.
/// No precision is lost for |i| > 2^53.
int compare_int_double(std::int64_t i, double d);

/// Total order over all field values: the numeric class (integers and
/// floats interleaved by exact numeric value) sorts before text; text
/// compares lexicographically by code point. Returns <0, 0, >0.
int order_compare(const FieldValue& a, const FieldValue& b);

/// Comparison under condition semantics: values of different classes
/// (numeric vs text) are incomparable and yield nullopt; otherwise the
/// sign of the comparison. Integer/float pairs widen exactly.
bool same_class(const FieldValue& a, const FieldValue& b);

struct OrderLess {
    bool operator()(const FieldValue& a, const FieldValue& b) const {
        return order_compare(a, b) < 0;
    }
};

std::string to_display_string(const FieldValue& v);

} // namespace evstore
