#include "evstore/core/field_value.hpp"

#include <cmath>
#include <charconv>

#include "evstore/core/error.hpp"

namespace evstore {

FieldValue make_integer(std::int64_t v) { return FieldValue(v); }

FieldValue make_number(double v) {
    if (!std::isfinite(v)) {
        raise(Errc::invalid_value, "number field values must be finite");
    }
    return FieldValue(v);
}

FieldValue make_text(std::string v) { return FieldValue(std::move(v)); }

double numeric_value(const FieldValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    return std::get<double>(v);
}

int compare_int_double(std::int64_t i, double d) {
    // int64 range is [-2^63, 2^63); both endpoints are exact doubles.
    constexpr double kTwo63 = 9223372036854775808.0;
    if (d < -kTwo63) return 1;
    if (d >= kTwo63) return -1;
    const double fl = std::floor(d);
    const auto di = static_cast<std::int64_t>(fl); // exact: |fl| < 2^63
    if (i < di) return -1;
    if (i > di) return 1;
    return d > fl ? -1 : 0;
}

namespace {

int sign_of(int c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

int numeric_compare(const FieldValue& a, const FieldValue& b) {
    const auto* ia = std::get_if<std::int64_t>(&a);
    const auto* ib = std::get_if<std::int64_t>(&b);
    if (ia && ib) return *ia < *ib ? -1 : (*ia > *ib ? 1 : 0);
    if (ia) return compare_int_double(*ia, std::get<double>(b));
    if (ib) return -compare_int_double(*ib, std::get<double>(a));
    const double da = std::get<double>(a);
    const double db = std::get<double>(b);
    return da < db ? -1 : (da > db ? 1 : 0);
}

} // namespace

int order_compare(const FieldValue& a, const FieldValue& b) {
    const bool ta = is_text(a);
    const bool tb = is_text(b);
    if (ta != tb) return ta ? 1 : -1; // numeric class first
    if (ta) return sign_of(std::get<std::string>(a).compare(std::get<std::string>(b)));
    return numeric_compare(a, b);
}

bool same_class(const FieldValue& a, const FieldValue& b) {
    return is_text(a) == is_text(b);
}

std::string to_display_string(const FieldValue& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    char buf[32];
    const double d = std::get<double>(v);
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, res.ptr);
}

} // namespace evstore
