#include "yangmorph/xml.hpp"

#include <cctype>

namespace yangmorph::xml {

namespace {

void append_escaped_text(std::string& out, std::string_view text) {
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out.push_back(c);
        }
    }
}

void append_escaped_attr(std::string& out, std::string_view text) {
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\n': out += "&#10;"; break;
        case '\t': out += "&#9;"; break;
        case '\r': out += "&#13;"; break;
        default: out.push_back(c);
        }
    }
}

void write_rec(const Node& node, int indent, std::string& out) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out.push_back('<');
    out += node.name;
    for (const auto& [k, v] : node.attributes) {
        out.push_back(' ');
        out += k;
        out += "=\"";
        append_escaped_attr(out, v);
        out.push_back('"');
    }
    if (node.children.empty() && node.text.empty()) {
        out += "/>\n";
        return;
    }
    out.push_back('>');
    if (node.children.empty()) {
        append_escaped_text(out, node.text);
        out += "</";
        out += node.name;
        out += ">\n";
        return;
    }
    out.push_back('\n');
    for (const auto& child : node.children) {
        write_rec(child, indent + 1, out);
    }
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += "</";
    out += node.name;
    out += ">\n";
}

class XmlParser {
public:
    explicit XmlParser(std::string_view text) : text_(text) {}

    Result<Node> parse_document() {
        if (!skip_prolog()) return error("malformed XML prolog");
        if (eof() || peek() != '<') return error("expected root element");
        auto root = parse_element();
        if (!root) return root;
        skip_misc();
        if (!eof()) return error("trailing content after root element");
        return root;
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
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    Diagnostic error(std::string msg) const {
        return Diagnostic::error(std::move(msg), SourceSpan{line_, col_}, "xml");
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    bool starts_with(std::string_view s) const {
        return text_.substr(pos_, s.size()) == s;
    }
    bool skip_until(std::string_view close) {
        while (!eof()) {
            if (starts_with(close)) {
                for (std::size_t i = 0; i < close.size(); ++i) advance();
                return true;
            }
            advance();
        }
        return false;
    }
    bool skip_prolog() {
        skip_misc();
        return true;
    }
    void skip_misc() {
        while (true) {
            skip_ws();
            if (starts_with("<?")) {
                if (!skip_until("?>")) return;
            } else if (starts_with("<!--")) {
                if (!skip_until("-->")) return;
            } else if (starts_with("<!")) {
                if (!skip_until(">")) return;
            } else {
                return;
            }
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
               c == '.' || c == ':';
    }

    std::string parse_name() {
        std::string name;
        while (!eof() && name_char(peek())) {
            name.push_back(peek());
            advance();
        }
        return name;
    }

    Result<std::string> parse_entity() {
        // Called at '&'.
        advance();
        std::string entity;
        while (!eof() && peek() != ';') {
            entity.push_back(peek());
            advance();
        }
        if (eof()) return error("unterminated entity reference");
        advance();
        if (entity == "amp") return std::string("&");
        if (entity == "lt") return std::string("<");
        if (entity == "gt") return std::string(">");
        if (entity == "quot") return std::string("\"");
        if (entity == "apos") return std::string("'");
        if (!entity.empty() && entity[0] == '#') {
            int code = 0;
            try {
                code = (entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X'))
                           ? std::stoi(entity.substr(2), nullptr, 16)
                           : std::stoi(entity.substr(1));
            } catch (...) {
                return error("invalid character reference '&" + entity + ";'");
            }
            if (code < 0 || code > 0x10FFFF) return error("character reference out of range");
            // UTF-8 encode.
            std::string out;
            if (code < 0x80) {
                out.push_back(static_cast<char>(code));
            } else if (code < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (code >> 6)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            } else if (code < 0x10000) {
                out.push_back(static_cast<char>(0xE0 | (code >> 12)));
                out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xF0 | (code >> 18)));
                out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
            }
            return out;
        }
        return error("unknown entity '&" + entity + ";'");
    }

    Result<Node> parse_element() {
        advance(); // consume '<'
        Node node;
        node.name = parse_name();
        if (node.name.empty()) return error("expected element name");
        while (true) {
            skip_ws();
            if (eof()) return error("unterminated element '" + node.name + "'");
            if (peek() == '/') {
                advance();
                if (peek() != '>') return error("malformed empty-element tag");
                advance();
                return node;
            }
            if (peek() == '>') {
                advance();
                break;
            }
            std::string key = parse_name();
            if (key.empty()) return error("expected attribute name");
            skip_ws();
            if (peek() != '=') return error("expected '=' after attribute name");
            advance();
            skip_ws();
            char quote = peek();
            if (quote != '"' && quote != '\'') return error("expected quoted attribute value");
            advance();
            std::string value;
            while (!eof() && peek() != quote) {
                if (peek() == '&') {
                    auto ent = parse_entity();
                    if (!ent) return ent.diagnostics();
                    value += ent.value();
                } else {
                    value.push_back(peek());
                    advance();
                }
            }
            if (eof()) return error("unterminated attribute value");
            advance();
            node.attributes.emplace_back(std::move(key), std::move(value));
        }
        // Content.
        while (true) {
            if (eof()) return error("unterminated element '" + node.name + "'");
            if (peek() == '<') {
                if (starts_with("</")) {
                    advance();
                    advance();
                    std::string close = parse_name();
                    if (close != node.name) {
                        return error("mismatched closing tag '" + close + "' for '" +
                                     node.name + "'");
                    }
                    skip_ws();
                    if (peek() != '>') return error("malformed closing tag");
                    advance();
                    if (!node.children.empty() && all_whitespace(node.text)) {
                        node.text.clear();
                    }
                    return node;
                }
                if (starts_with("<!--")) {
                    if (!skip_until("-->")) return error("unterminated comment");
                    continue;
                }
                if (starts_with("<![CDATA[")) {
                    for (int i = 0; i < 9; ++i) advance();
                    std::size_t start = pos_;
                    if (!skip_until("]]>")) return error("unterminated CDATA section");
                    node.text.append(text_.substr(start, pos_ - 3 - start));
                    continue;
                }
                if (starts_with("<?")) {
                    if (!skip_until("?>")) return error("unterminated processing instruction");
                    continue;
                }
                auto child = parse_element();
                if (!child) return child;
                node.children.push_back(child.take());
                continue;
            }
            if (peek() == '&') {
                auto ent = parse_entity();
                if (!ent) return ent.diagnostics();
                node.text += ent.value();
                continue;
            }
            node.text.push_back(peek());
            advance();
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

Result<Node> parse(std::string_view text) {
    XmlParser parser(text);
    return parser.parse_document();
}

std::string write(const Node& root) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    write_rec(root, 0, out);
    return out;
}

} // namespace yangmorph::xml
