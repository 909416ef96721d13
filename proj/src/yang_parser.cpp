#include "yangmorph/yang_parser.hpp"

#include <cctype>

#include "yangmorph/yang_grammar.hpp"

namespace yangmorph {

namespace {

struct Token {
    enum class Kind { String, QuotedString, Semicolon, OpenBrace, CloseBrace, End };
    Kind kind = Kind::End;
    std::string text;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Result<Token> next() {
        if (!skip_trivia()) {
            return Diagnostic::error("unterminated block comment", span(), "lex.comment");
        }
        Token tok;
        tok.span = span();
        if (eof()) {
            tok.kind = Token::Kind::End;
            return tok;
        }
        char c = peek();
        if (c == ';') {
            advance();
            tok.kind = Token::Kind::Semicolon;
            return tok;
        }
        if (c == '{') {
            advance();
            tok.kind = Token::Kind::OpenBrace;
            return tok;
        }
        if (c == '}') {
            advance();
            tok.kind = Token::Kind::CloseBrace;
            return tok;
        }
        if (c == '"' || c == '\'') {
            return quoted_string();
        }
        return unquoted_string();
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t off = 0) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }
    void advance() {
        if (eof()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else if (text_[pos_] == '\t') {
            column_ += 8 - ((column_ - 1) % 8);
        } else {
            ++column_;
        }
        ++pos_;
    }
    SourceSpan span() const { return SourceSpan{line_, column_}; }

    // Skips whitespace and both comment forms; false on an unterminated
    // block comment.
    bool skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!eof() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                advance();
                advance();
                bool closed = false;
                while (!eof()) {
                    if (peek() == '*' && peek(1) == '/') {
                        advance();
                        advance();
                        closed = true;
                        break;
                    }
                    advance();
                }
                if (!closed) return false;
            } else {
                break;
            }
        }
        return true;
    }

    Result<Token> quoted_string() {
        Token tok;
        tok.kind = Token::Kind::QuotedString;
        tok.span = span();
        std::string value;
        bool first = true;
        while (true) {
            if (!first) {
                // Check for a `+` concatenation between quoted parts.
                std::size_t save_pos = pos_;
                int save_line = line_, save_col = column_;
                if (!skip_trivia()) {
                    return Diagnostic::error("unterminated block comment", span(), "lex.comment");
                }
                if (peek() == '+') {
                    advance();
                    if (!skip_trivia()) {
                        return Diagnostic::error("unterminated block comment", span(),
                                                 "lex.comment");
                    }
                    if (peek() != '"' && peek() != '\'') {
                        return Diagnostic::error("expected quoted string after '+'", span(),
                                                 "lex.concat");
                    }
                } else {
                    pos_ = save_pos;
                    line_ = save_line;
                    column_ = save_col;
                    break;
                }
            }
            first = false;
            char quote = peek();
            int quote_column = column_;
            advance();
            if (quote == '\'') {
                bool closed = false;
                while (!eof()) {
                    if (peek() == '\'') {
                        advance();
                        closed = true;
                        break;
                    }
                    value.push_back(peek());
                    advance();
                }
                if (!closed) {
                    return Diagnostic::error("unterminated quoted string", tok.span, "lex.string");
                }
            } else {
                bool closed = false;
                while (!eof()) {
                    char c = peek();
                    if (c == '"') {
                        advance();
                        closed = true;
                        break;
                    }
                    if (c == '\\') {
                        char esc = peek(1);
                        if (esc == 'n') {
                            value.push_back('\n');
                            advance();
                            advance();
                            continue;
                        }
                        if (esc == 't') {
                            value.push_back('\t');
                            advance();
                            advance();
                            continue;
                        }
                        if (esc == '"' || esc == '\\') {
                            value.push_back(esc);
                            advance();
                            advance();
                            continue;
                        }
                        value.push_back('\\');
                        advance();
                        continue;
                    }
                    if (c == '\n') {
                        value.push_back('\n');
                        advance();
                        // RFC 6020 6.1.3: strip indentation up to and
                        // including the column of the opening quote.
                        int limit = quote_column;
                        while (!eof() && column_ <= limit &&
                               (peek() == ' ' || peek() == '\t')) {
                            advance();
                        }
                        continue;
                    }
                    value.push_back(c);
                    advance();
                }
                if (!closed) {
                    return Diagnostic::error("unterminated quoted string", tok.span, "lex.string");
                }
            }
        }
        tok.text = std::move(value);
        return tok;
    }

    Result<Token> unquoted_string() {
        Token tok;
        tok.kind = Token::Kind::String;
        tok.span = span();
        std::string value;
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c)) || c == ';' || c == '{' ||
                c == '}' || c == '"' || c == '\'') {
                break;
            }
            if (c == '/' && (peek(1) == '/' || peek(1) == '*')) break;
            value.push_back(c);
            advance();
        }
        tok.text = std::move(value);
        return tok;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    Result<std::vector<YangStatement>> parse_all() {
        std::vector<YangStatement> stmts;
        while (true) {
            auto tok = peek_token();
            if (!tok) return tok.diagnostics();
            if (tok.value().kind == Token::Kind::End) break;
            auto stmt = parse_statement();
            if (!stmt) return stmt.diagnostics();
            stmts.push_back(stmt.take());
        }
        return stmts;
    }

private:
    Result<Token> peek_token() {
        if (!lookahead_) {
            auto tok = lexer_.next();
            if (!tok) return tok;
            lookahead_ = tok.take();
        }
        return *lookahead_;
    }
    Result<Token> take_token() {
        auto tok = peek_token();
        if (tok) lookahead_.reset();
        return tok;
    }

    Result<YangStatement> parse_statement() {
        auto kw_tok = take_token();
        if (!kw_tok) return kw_tok.diagnostics();
        const Token& kw = kw_tok.value();
        if (kw.kind == Token::Kind::CloseBrace) {
            return Diagnostic::error("unexpected '}'", kw.span, "parse.brace");
        }
        if (kw.kind != Token::Kind::String) {
            return Diagnostic::error("expected statement keyword", kw.span, "parse.keyword");
        }
        if (!is_valid_keyword(kw.text)) {
            return Diagnostic::error("illegal keyword character in '" + kw.text + "'", kw.span,
                                     "parse.keyword");
        }

        YangStatement stmt;
        stmt.keyword = kw.text;
        stmt.span = kw.span;

        auto next = take_token();
        if (!next) return next.diagnostics();
        Token tok = next.take();
        if (tok.kind == Token::Kind::String || tok.kind == Token::Kind::QuotedString) {
            stmt.argument = tok.text;
            auto after = take_token();
            if (!after) return after.diagnostics();
            tok = after.take();
        }

        if (tok.kind == Token::Kind::Semicolon) {
            return stmt;
        }
        if (tok.kind == Token::Kind::OpenBrace) {
            while (true) {
                auto inner = peek_token();
                if (!inner) return inner.diagnostics();
                if (inner.value().kind == Token::Kind::CloseBrace) {
                    lookahead_.reset();
                    return stmt;
                }
                if (inner.value().kind == Token::Kind::End) {
                    return Diagnostic::error("unbalanced brace: block opened at line " +
                                                 std::to_string(stmt.span.line) +
                                                 " is never closed",
                                             inner.value().span, "parse.brace");
                }
                auto child = parse_statement();
                if (!child) return child.diagnostics();
                stmt.children.push_back(child.take());
            }
        }
        if (tok.kind == Token::Kind::String || tok.kind == Token::Kind::QuotedString) {
            return Diagnostic::error("missing statement terminator before '" + tok.text + "'",
                                     tok.span, "parse.terminator");
        }
        return Diagnostic::error("missing statement terminator", tok.span, "parse.terminator");
    }

    Lexer lexer_;
    std::optional<Token> lookahead_;
};

} // namespace

Result<std::vector<YangStatement>> parse_statements(std::string_view text) {
    Parser parser(text);
    return parser.parse_all();
}

Result<YangModule> parse_yang(std::string_view text) {
    auto stmts = parse_statements(text);
    if (!stmts) return stmts.diagnostics();
    auto& list = stmts.value();
    if (list.empty()) {
        return Diagnostic::error("no module or submodule statement found", SourceSpan{1, 1},
                                 "parse.module");
    }
    if (list.size() > 1) {
        return Diagnostic::error("exactly one module or submodule per file",
                                 list[1].span, "parse.module");
    }
    YangStatement root = std::move(list.front());
    if (root.keyword != "module" && root.keyword != "submodule") {
        return Diagnostic::error("top-level statement must be module or submodule", root.span,
                                 "parse.module");
    }
    if (!root.argument || root.argument->empty()) {
        return Diagnostic::error("module statement requires a name", root.span, "parse.module");
    }
    return YangModule::from_root(std::move(root), SourceKind::YangText);
}

} // namespace yangmorph
