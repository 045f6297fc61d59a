#include "evstore/queryir/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace evstore::queryir {

namespace {

enum class TokKind { ident, number, string, lbrace, rbrace, lparen, rparen, colon, comma, eof };

struct Token {
    TokKind kind;
    std::string text; // ident name, number spelling, or unquoted string body
    int line = 1;
    int col = 1;
};

const char* tok_name(TokKind k) {
    switch (k) {
        case TokKind::ident: return "identifier";
        case TokKind::number: return "number";
        case TokKind::string: return "string";
        case TokKind::lbrace: return "'{'";
        case TokKind::rbrace: return "'}'";
        case TokKind::lparen: return "'('";
        case TokKind::rparen: return "')'";
        case TokKind::colon: return "':'";
        case TokKind::comma: return "','";
        case TokKind::eof: return "end of input";
    }
    return "?";
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {TokKind::eof, "", line, col};
        const char c = text_[pos_];
        if (c == '{') return punct(TokKind::lbrace, line, col);
        if (c == '}') return punct(TokKind::rbrace, line, col);
        if (c == '(') return punct(TokKind::lparen, line, col);
        if (c == ')') return punct(TokKind::rparen, line, col);
        if (c == ':') return punct(TokKind::colon, line, col);
        if (c == ',') return punct(TokKind::comma, line, col);
        if (c == '\'' || c == '"') return quoted(c, line, col);
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return number(line, col);
        if (ident_start(c)) return ident(line, col);
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            advance();
        }
    }

    Token punct(TokKind k, int line, int col) {
        advance();
        return {k, "", line, col};
    }

    Token quoted(char quote, int line, int col) {
        advance(); // opening quote
        std::string body;
        while (pos_ < text_.size() && text_[pos_] != quote && text_[pos_] != '\n') {
            body.push_back(text_[pos_]);
            advance();
        }
        if (pos_ >= text_.size() || text_[pos_] != quote) {
            throw ParseError(line, col, "unterminated string");
        }
        advance(); // closing quote
        return {TokKind::string, std::move(body), line, col};
    }

    Token number(int line, int col) {
        std::string spelling;
        auto take = [&] {
            spelling.push_back(text_[pos_]);
            advance();
        };
        if (text_[pos_] == '-') take();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError(line, col, "malformed number");
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) take();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            take();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError(line, col, "malformed number");
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                take();
            }
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            take();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) take();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError(line, col, "malformed number");
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                take();
            }
        }
        return {TokKind::number, std::move(spelling), line, col};
    }

    Token ident(int line, int col) {
        std::string name;
        while (pos_ < text_.size() && ident_char(text_[pos_])) {
            name.push_back(text_[pos_]);
            advance();
        }
        return {TokKind::ident, std::move(name), line, col};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    QueryAst parse_query() {
        expect_ident("query");
        expect(TokKind::lbrace);
        QueryAst ast;
        ast.root = parse_field();
        expect(TokKind::rbrace);
        expect(TokKind::eof);
        return ast;
    }

private:
    void shift() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(tok_.line, tok_.col, message);
    }

    void expect(TokKind kind) {
        if (tok_.kind != kind) {
            fail(std::string("expected ") + tok_name(kind) + ", got " + tok_name(tok_.kind));
        }
        shift();
    }

    void expect_ident(std::string_view word) {
        if (tok_.kind != TokKind::ident || tok_.text != word) {
            fail("expected '" + std::string(word) + "'");
        }
        shift();
    }

    FieldValue parse_literal() {
        if (tok_.kind == TokKind::string || tok_.kind == TokKind::ident) {
            FieldValue v = make_text(tok_.text);
            shift();
            return v;
        }
        if (tok_.kind == TokKind::number) {
            const std::string s = tok_.text;
            shift();
            if (s.find_first_of(".eE") == std::string::npos) {
                std::int64_t i = 0;
                auto [p, e] = std::from_chars(s.data(), s.data() + s.size(), i);
                if (e == std::errc() && p == s.data() + s.size()) return make_integer(i);
            }
            double d = 0;
            std::from_chars(s.data(), s.data() + s.size(), d);
            return make_number(d);
        }
        fail(std::string("expected literal, got ") + tok_name(tok_.kind));
    }

    void parse_args(FieldNode& node) {
        shift(); // '('
        while (true) {
            if (tok_.kind != TokKind::ident) {
                fail(std::string("expected argument name, got ") + tok_name(tok_.kind));
            }
            const std::string name = tok_.text;
            const int line = tok_.line, col = tok_.col;
            for (const auto& [existing, v] : node.args) {
                if (existing == name) {
                    throw ParseError(line, col, "duplicate argument '" + name + "'");
                }
            }
            shift();
            expect(TokKind::colon);
            node.args.emplace_back(name, parse_literal());
            if (tok_.kind == TokKind::comma) {
                shift();
                continue;
            }
            expect(TokKind::rparen);
            break;
        }
    }

    FieldNode parse_field() {
        if (tok_.kind != TokKind::ident) {
            fail(std::string("expected field name, got ") + tok_name(tok_.kind));
        }
        FieldNode node;
        node.name = tok_.text;
        shift();
        if (tok_.kind == TokKind::lparen) parse_args(node);
        expect(TokKind::lbrace);
        finish_field(node);
        return node;
    }

    // body of a field after its opening brace: nested fields XOR selections
    void finish_field(FieldNode& node) {
        while (tok_.kind != TokKind::rbrace) {
            if (tok_.kind != TokKind::ident) {
                fail(std::string("expected field or selection name, got ") + tok_name(tok_.kind));
            }
            const Token head = tok_;
            shift();
            if (tok_.kind == TokKind::lparen || tok_.kind == TokKind::lbrace) {
                if (!node.selections.empty()) {
                    throw ParseError(head.line, head.col,
                                     "cannot mix nested fields and leaf selections");
                }
                FieldNode child;
                child.name = head.text;
                if (tok_.kind == TokKind::lparen) parse_args(child);
                expect(TokKind::lbrace);
                finish_field(child);
                node.children.push_back(std::move(child));
            } else {
                if (!node.children.empty()) {
                    throw ParseError(head.line, head.col,
                                     "cannot mix nested fields and leaf selections");
                }
                node.selections.push_back(head.text);
            }
        }
        if (node.children.empty() && node.selections.empty()) {
            fail("field block is empty");
        }
        shift(); // '}'
    }

    Lexer lexer_;
    Token tok_{TokKind::eof, "", 1, 1};
};

} // namespace

QueryAst parse(std::string_view text) { return Parser(text).parse_query(); }

namespace {

void print_field(const FieldNode& node, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out += pad + node.name;
    if (!node.args.empty()) {
        out += "(";
        bool first = true;
        for (const auto& [name, value] : node.args) {
            if (!first) out += ", ";
            first = false;
            out += name + ": ";
            if (is_text(value)) {
                out += "\"" + std::get<std::string>(value) + "\"";
            } else {
                std::string lit = to_display_string(value);
                // a float literal must reparse as a float
                if (std::holds_alternative<double>(value) &&
                    lit.find_first_of(".eE") == std::string::npos) {
                    lit += ".0";
                }
                out += lit;
            }
        }
        out += ")";
    }
    out += " {\n";
    for (const auto& child : node.children) print_field(child, out, depth + 1);
    for (const auto& sel : node.selections) {
        out += std::string(static_cast<std::size_t>(depth + 1) * 2, ' ') + sel + "\n";
    }
    out += pad + "}\n";
}

} // namespace

std::string to_text(const QueryAst& ast) {
    std::string out = "query {\n";
    print_field(ast.root, out, 1);
    out += "}\n";
    return out;
}

} // namespace evstore::queryir
