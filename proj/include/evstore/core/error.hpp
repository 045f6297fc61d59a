#pragma once

#include <stdexcept>
#include <string>

namespace evstore {

enum class Errc {
    duplicate_collection,
    duplicate_key,
    document_too_large,
    not_found,
    multiple_inequality_fields,
    invalid_spec,
    duplicate_table,
    invalid_schema,
    schema_violation,
    unknown_column,
    syntax_error,
    unvalidated_ast,
    out_of_bounds,
    bad_precision,
    bad_character,
    precision_too_fine,
    rank_deficient,
    too_few_samples,
    arity_mismatch,
    empty_input,
    unsupported_combination,
    invalid_value,
    io_error,
    usage_error,
};

/// Stable, grep-friendly tag for an error code, e.g. "DuplicateKey".
const char* errc_tag(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* tag() const noexcept { return errc_tag(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace evstore
