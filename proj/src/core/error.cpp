#include "evstore/core/error.hpp"

namespace evstore {

const char* errc_tag(Errc code) {
    switch (code) {
        case Errc::duplicate_collection: return "DuplicateCollection";
        case Errc::duplicate_key: return "DuplicateKey";
        case Errc::document_too_large: return "DocumentTooLarge";
        case Errc::not_found: return "NotFound";
        case Errc::multiple_inequality_fields: return "MultipleInequalityFields";
        case Errc::invalid_spec: return "InvalidSpec";
        case Errc::duplicate_table: return "DuplicateTable";
        case Errc::invalid_schema: return "InvalidSchema";
        case Errc::schema_violation: return "SchemaViolation";
        case Errc::unknown_column: return "UnknownColumn";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::unvalidated_ast: return "UnvalidatedAst";
        case Errc::out_of_bounds: return "OutOfBounds";
        case Errc::bad_precision: return "BadPrecision";
        case Errc::bad_character: return "BadCharacter";
        case Errc::precision_too_fine: return "PrecisionTooFine";
        case Errc::rank_deficient: return "RankDeficient";
        case Errc::too_few_samples: return "TooFewSamples";
        case Errc::arity_mismatch: return "ArityMismatch";
        case Errc::empty_input: return "EmptyInput";
        case Errc::unsupported_combination: return "UnsupportedCombination";
        case Errc::invalid_value: return "InvalidValue";
        case Errc::io_error: return "IoError";
        case Errc::usage_error: return "UsageError";
    }
    return "Error";
}

} // namespace evstore
