#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "yangmorph/diagnostics.hpp"

namespace yangmorph {

/// Uniform AST node for every YANG statement: a keyword, an optional
/// argument and an ordered list of substatements. Extension statements use
/// a prefixed keyword of the form `prefix:keyword`.
struct YangStatement {
    std::string keyword;
    std::optional<std::string> argument;
    std::vector<YangStatement> children;
    SourceSpan span;

    YangStatement() = default;
    YangStatement(std::string kw, std::optional<std::string> arg = std::nullopt,
                  std::vector<YangStatement> kids = {})
        : keyword(std::move(kw)), argument(std::move(arg)), children(std::move(kids)) {}

    bool has_argument() const { return argument.has_value(); }
    const std::string& arg_or_empty() const {
        static const std::string empty;
        return argument ? *argument : empty;
    }

    const YangStatement* find_child(const std::string& kw) const {
        for (const auto& c : children) {
            if (c.keyword == kw) return &c;
        }
        return nullptr;
    }
    std::vector<const YangStatement*> find_children(const std::string& kw) const {
        std::vector<const YangStatement*> out;
        for (const auto& c : children) {
            if (c.keyword == kw) out.push_back(&c);
        }
        return out;
    }
};

/// Structural equality: keyword, argument and children in order. Source
/// spans are ignored.
bool statements_equal(const YangStatement& a, const YangStatement& b);

/// Total number of statements in the subtree, the root included.
std::size_t statement_count(const YangStatement& root);

/// Where a module came from; YIN input round-trips through the same AST.
enum class SourceKind { YangText, YinXml };

/// A parsed YANG module or submodule. Exactly one per file.
struct YangModule {
    YangStatement root; // keyword `module` or `submodule`
    std::string name;
    std::optional<std::string> revision; // latest revision date, as written
    SourceKind source_kind = SourceKind::YangText;

    static YangModule from_root(YangStatement root, SourceKind kind = SourceKind::YangText);

    bool is_submodule() const { return root.keyword == "submodule"; }
};

/// First difference between two ASTs, if any, as a human-readable pair of
/// path and mismatch description. Used by round-trip reporting.
struct StatementDiff {
    std::string path;
    std::string expected;
    std::string actual;
};

/// Order-sensitive structural diff; collects up to `limit` differences.
std::vector<StatementDiff> diff_statements(const YangStatement& expected,
                                           const YangStatement& actual,
                                           std::size_t limit = 50);

} // namespace yangmorph
