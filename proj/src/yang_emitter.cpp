#include "yangmorph/yang_emitter.hpp"

#include <cctype>
#include <sstream>

#include "yangmorph/yang_grammar.hpp"

namespace yangmorph {

namespace {

bool needs_quoting(const std::string& arg) {
    if (arg.empty()) return true;
    for (std::size_t i = 0; i < arg.size(); ++i) {
        char c = arg[i];
        if (std::isspace(static_cast<unsigned char>(c))) return true;
        if (c == ';' || c == '{' || c == '}' || c == '"' || c == '\'' || c == '\\') return true;
        if (c == '+' && arg.size() == 1) return true;
        if (c == '/' && i + 1 < arg.size() && (arg[i + 1] == '/' || arg[i + 1] == '*'))
            return true;
        if (c == '*' && i + 1 < arg.size() && arg[i + 1] == '/') return true;
    }
    return false;
}

void append_quoted(std::string& out, const std::string& arg) {
    out.push_back('"');
    for (char c : arg) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out.push_back(c);
        }
    }
    out.push_back('"');
}

void emit_rec(const YangStatement& stmt, int indent, std::string& out) {
    out.append(static_cast<std::size_t>(indent) * 4, ' ');
    out += stmt.keyword;
    if (stmt.argument) {
        out.push_back(' ');
        const KeywordInfo* info = keyword_info(stmt.keyword);
        bool quote = needs_quoting(*stmt.argument) || (info && info->quoted_argument);
        if (quote) {
            append_quoted(out, *stmt.argument);
        } else {
            out += *stmt.argument;
        }
    }
    // module/submodule keep block form even when empty.
    bool block = !stmt.children.empty() || stmt.keyword == "module" ||
                 stmt.keyword == "submodule";
    if (!block) {
        out += ";\n";
        return;
    }
    out += " {\n";
    for (const auto& child : stmt.children) {
        emit_rec(child, indent + 1, out);
    }
    out.append(static_cast<std::size_t>(indent) * 4, ' ');
    out += "}\n";
}

} // namespace

std::string emit_statement(const YangStatement& stmt, int indent) {
    std::string out;
    emit_rec(stmt, indent, out);
    return out;
}

std::string emit_yang(const YangModule& module) {
    return emit_statement(module.root, 0);
}

} // namespace yangmorph
