#include "yangmorph/yang_ast.hpp"

#include <sstream>

namespace yangmorph {

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream os;
    os << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message;
    if (d.span.line > 0) {
        os << " (line " << d.span.line << ", column " << d.span.column << ")";
    }
    if (!d.rule.empty()) {
        os << " [" << d.rule << "]";
    }
    return os.str();
}

bool statements_equal(const YangStatement& a, const YangStatement& b) {
    if (a.keyword != b.keyword || a.argument != b.argument) return false;
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!statements_equal(a.children[i], b.children[i])) return false;
    }
    return true;
}

std::size_t statement_count(const YangStatement& root) {
    std::size_t n = 1;
    for (const auto& c : root.children) n += statement_count(c);
    return n;
}

YangModule YangModule::from_root(YangStatement root, SourceKind kind) {
    YangModule m;
    m.name = root.argument.value_or("");
    for (const auto& c : root.children) {
        if (c.keyword == "revision" && c.argument) {
            if (!m.revision || *c.argument > *m.revision) m.revision = *c.argument;
        }
    }
    m.root = std::move(root);
    m.source_kind = kind;
    return m;
}

namespace {

std::string describe(const YangStatement& s) {
    std::string out = s.keyword;
    if (s.argument) out += " \"" + *s.argument + "\"";
    out += " (" + std::to_string(s.children.size()) + " substatements)";
    return out;
}

void diff_rec(const YangStatement& expected, const YangStatement& actual, std::string path,
              std::vector<StatementDiff>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    path += "/" + expected.keyword;
    if (expected.argument) path += ":" + *expected.argument;
    if (expected.keyword != actual.keyword || expected.argument != actual.argument) {
        out.push_back({path, describe(expected), describe(actual)});
        return;
    }
    std::size_t n = std::min(expected.children.size(), actual.children.size());
    for (std::size_t i = 0; i < n && out.size() < limit; ++i) {
        diff_rec(expected.children[i], actual.children[i], path, out, limit);
    }
    if (expected.children.size() != actual.children.size() && out.size() < limit) {
        out.push_back({path,
                       std::to_string(expected.children.size()) + " substatements",
                       std::to_string(actual.children.size()) + " substatements"});
    }
}

} // namespace

std::vector<StatementDiff> diff_statements(const YangStatement& expected,
                                           const YangStatement& actual, std::size_t limit) {
    std::vector<StatementDiff> out;
    diff_rec(expected, actual, "", out, limit);
    return out;
}

} // namespace yangmorph
