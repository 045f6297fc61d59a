#pragma once

#include <string>
#include <string_view>

#include "evstore/core/error.hpp"
#include "evstore/queryir/ast.hpp"

namespace evstore::queryir {

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(Errc::syntax_error, "line " + std::to_string(line) + ", col " +
                                        std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parses `query { FIELD }` where
///   FIELD := name ( '(' args ')' )? '{' ( FIELD+ | name+ ) '}'
///   args  := name ':' literal ( ',' name ':' literal )*
/// Literals are numbers or quoted/unquoted words; whitespace is free.
QueryAst parse(std::string_view text); // throws ParseError

} // namespace evstore::queryir
