#include "yangmorph/yang_validator.hpp"

#include <map>
#include <optional>

#include "yangmorph/yang_grammar.hpp"

namespace yangmorph {

namespace {

// Effective `config` context while walking the data tree. Groupings, rpcs
// and notifications have no config context until instantiated.
using ConfigContext = std::optional<bool>;

void check_statement(const YangStatement& stmt, ConfigContext config,
                     std::vector<Diagnostic>& out) {
    if (is_extension_keyword(stmt.keyword)) {
        out.push_back(Diagnostic::warning("unknown extension keyword '" + stmt.keyword + "'",
                                          stmt.span, "keyword.extension"));
        // Substatements of extensions are opaque; keep them untouched.
        return;
    }
    const KeywordInfo* info = keyword_info(stmt.keyword);
    if (!info) {
        out.push_back(Diagnostic::error("unknown keyword '" + stmt.keyword + "'", stmt.span,
                                        "keyword.unknown"));
        return;
    }
    if (info->takes_argument && !stmt.argument) {
        out.push_back(Diagnostic::error("'" + stmt.keyword + "' requires an argument",
                                        stmt.span, "argument.missing"));
    } else if (!info->takes_argument && stmt.argument) {
        out.push_back(Diagnostic::error("'" + stmt.keyword + "' takes no argument", stmt.span,
                                        "argument.unexpected"));
    }

    std::map<std::string_view, int> counts;
    for (const auto& child : stmt.children) {
        if (is_extension_keyword(child.keyword)) continue;
        bool allowed = false;
        for (const auto& rule : info->substatements) {
            if (rule.keyword == child.keyword) {
                allowed = true;
                ++counts[rule.keyword];
                break;
            }
        }
        if (!allowed && keyword_info(child.keyword)) {
            out.push_back(Diagnostic::error("'" + child.keyword + "' not allowed in '" +
                                                stmt.keyword + "'",
                                            child.span, "substatement.misplaced"));
        }
    }
    for (const auto& rule : info->substatements) {
        int n = counts.count(rule.keyword) ? counts[rule.keyword] : 0;
        if (n < rule.cardinality.min) {
            out.push_back(Diagnostic::error("'" + stmt.keyword +
                                                (stmt.argument ? " " + *stmt.argument : "") +
                                                "' requires '" + std::string(rule.keyword) +
                                                "'",
                                            stmt.span,
                                            "cardinality." + stmt.keyword + "." +
                                                std::string(rule.keyword)));
        }
        if (rule.cardinality.max >= 0 && n > rule.cardinality.max) {
            out.push_back(Diagnostic::error("at most one '" + std::string(rule.keyword) +
                                                "' allowed in '" + stmt.keyword + "'",
                                            stmt.span,
                                            "cardinality." + stmt.keyword + "." +
                                                std::string(rule.keyword)));
        }
    }

    // Config inheritance: explicit config switches the context; groupings,
    // rpc bodies and notifications leave it undetermined.
    ConfigContext child_config = config;
    if (stmt.keyword == "grouping" || stmt.keyword == "rpc" || stmt.keyword == "input" ||
        stmt.keyword == "output" || stmt.keyword == "notification" ||
        stmt.keyword == "typedef") {
        child_config = std::nullopt;
    } else if (const YangStatement* cfg = stmt.find_child("config")) {
        if (cfg->argument == "true") child_config = true;
        else if (cfg->argument == "false") child_config = false;
    }

    if (stmt.keyword == "list" && child_config.value_or(false) && !stmt.find_child("key")) {
        out.push_back(Diagnostic::error("list with config true requires key", stmt.span,
                                        "list.key"));
    }

    for (const auto& child : stmt.children) {
        check_statement(child, child_config, out);
    }
}

} // namespace

std::vector<Diagnostic> validate(const YangModule& module) {
    std::vector<Diagnostic> out;
    if (module.root.keyword != "module" && module.root.keyword != "submodule") {
        out.push_back(Diagnostic::error("root statement must be module or submodule",
                                        module.root.span, "module.root"));
        return out;
    }
    check_statement(module.root, true, out);
    return out;
}

} // namespace yangmorph
