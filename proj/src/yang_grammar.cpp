#include "yangmorph/yang_grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace yangmorph {

namespace {

constexpr Cardinality kOpt{0, 1};
constexpr Cardinality kAny{0, -1};
constexpr Cardinality kOne{1, 1};
constexpr Cardinality kPlus{1, -1};

// Shared substatement groups of RFC 6020.
std::vector<SubstatementRule> doc_only() {
    return {{"description", kOpt}, {"reference", kOpt}};
}

std::vector<SubstatementRule> restriction_subs() {
    return {{"error-message", kOpt},
            {"error-app-tag", kOpt},
            {"description", kOpt},
            {"reference", kOpt}};
}

std::vector<SubstatementRule> body_data_defs() {
    // Data definition statements permitted in module/submodule bodies and
    // most composite nodes.
    return {{"container", kAny}, {"leaf", kAny},   {"leaf-list", kAny},
            {"list", kAny},      {"choice", kAny}, {"anyxml", kAny},
            {"uses", kAny}};
}

std::vector<SubstatementRule>
with(std::vector<SubstatementRule> base, std::vector<SubstatementRule> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

std::map<std::string_view, KeywordInfo> build_table() {
    std::map<std::string_view, KeywordInfo> t;
    auto add = [&t](std::string_view kw, bool takes_arg, std::string_view yin_arg,
                    bool yin_elem, bool quoted, std::vector<SubstatementRule> subs) {
        t[kw] = KeywordInfo{kw, takes_arg, yin_arg, yin_elem, quoted, std::move(subs)};
    };

    auto module_body = with(body_data_defs(),
                            {{"augment", kAny},
                             {"choice", kAny},
                             {"contact", kOpt},
                             {"description", kOpt},
                             {"deviation", kAny},
                             {"extension", kAny},
                             {"feature", kAny},
                             {"grouping", kAny},
                             {"identity", kAny},
                             {"import", kAny},
                             {"include", kAny},
                             {"notification", kAny},
                             {"organization", kOpt},
                             {"reference", kOpt},
                             {"revision", kAny},
                             {"rpc", kAny},
                             {"typedef", kAny},
                             {"yang-version", kOpt}});

    // The paper's module slice carries no namespace statement, and the
    // validator must accept it cleanly, so namespace/prefix are optional
    // here rather than RFC-mandatory.
    add("module", true, "name", false, false,
        with(module_body, {{"namespace", kOpt}, {"prefix", kOpt}}));
    add("submodule", true, "name", false, false,
        with(module_body, {{"belongs-to", kOpt}}));

    add("yang-version", true, "value", false, false, {});
    add("namespace", true, "uri", false, true, {});
    add("prefix", true, "value", false, false, {});
    add("belongs-to", true, "module", false, false, {{"prefix", kOne}});
    add("import", true, "module", false, false,
        {{"prefix", kOne}, {"revision-date", kOpt}});
    add("include", true, "module", false, false, {{"revision-date", kOpt}});
    add("revision", true, "date", false, false, doc_only());
    add("revision-date", true, "date", false, false, {});
    add("organization", true, "text", true, true, {});
    add("contact", true, "text", true, true, {});
    add("description", true, "text", true, true, {});
    add("reference", true, "text", true, true, {});
    add("units", true, "name", false, true, {});

    add("typedef", true, "name", false, false,
        {{"type", kOne},
         {"units", kOpt},
         {"default", kOpt},
         {"status", kOpt},
         {"description", kOpt},
         {"reference", kOpt}});
    add("type", true, "name", false, false,
        {{"fraction-digits", kOpt},
         {"range", kOpt},
         {"length", kOpt},
         {"pattern", kAny},
         {"enum", kAny},
         {"bit", kAny},
         {"path", kOpt},
         {"base", kOpt},
         {"require-instance", kOpt},
         {"type", kAny}});
    add("fraction-digits", true, "value", false, false, {});
    add("range", true, "value", false, true, restriction_subs());
    add("length", true, "value", false, true, restriction_subs());
    add("pattern", true, "value", false, true, restriction_subs());
    add("enum", true, "name", false, true,
        with(doc_only(), {{"value", kOpt}, {"status", kOpt}}));
    add("bit", true, "name", false, false,
        with(doc_only(), {{"position", kOpt}, {"status", kOpt}}));
    add("position", true, "value", false, false, {});
    add("value", true, "value", false, false, {});
    add("path", true, "value", false, true, {});
    add("require-instance", true, "value", false, false, {});
    add("error-message", true, "value", true, true, {});
    add("error-app-tag", true, "value", false, true, {});

    add("container", true, "name", false, false,
        with(body_data_defs(), {{"config", kOpt},
                                {"description", kOpt},
                                {"grouping", kAny},
                                {"if-feature", kAny},
                                {"must", kAny},
                                {"presence", kOpt},
                                {"reference", kOpt},
                                {"status", kOpt},
                                {"typedef", kAny},
                                {"when", kOpt}}));
    add("leaf", true, "name", false, false,
        {{"config", kOpt},
         {"default", kOpt},
         {"description", kOpt},
         {"if-feature", kAny},
         {"mandatory", kOpt},
         {"must", kAny},
         {"reference", kOpt},
         {"status", kOpt},
         {"type", kOne},
         {"units", kOpt},
         {"when", kOpt}});
    add("leaf-list", true, "name", false, false,
        {{"config", kOpt},
         {"description", kOpt},
         {"if-feature", kAny},
         {"max-elements", kOpt},
         {"min-elements", kOpt},
         {"must", kAny},
         {"ordered-by", kOpt},
         {"reference", kOpt},
         {"status", kOpt},
         {"type", kOne},
         {"units", kOpt},
         {"when", kOpt}});
    add("list", true, "name", false, false,
        with(body_data_defs(), {{"config", kOpt},
                                {"description", kOpt},
                                {"grouping", kAny},
                                {"if-feature", kAny},
                                {"key", kOpt},
                                {"max-elements", kOpt},
                                {"min-elements", kOpt},
                                {"must", kAny},
                                {"ordered-by", kOpt},
                                {"reference", kOpt},
                                {"status", kOpt},
                                {"typedef", kAny},
                                {"unique", kAny},
                                {"when", kOpt}}));
    add("choice", true, "name", false, false,
        {{"anyxml", kAny},
         {"case", kAny},
         {"config", kOpt},
         {"container", kAny},
         {"default", kOpt},
         {"description", kOpt},
         {"if-feature", kAny},
         {"leaf", kAny},
         {"leaf-list", kAny},
         {"list", kAny},
         {"mandatory", kOpt},
         {"reference", kOpt},
         {"status", kOpt},
         {"when", kOpt}});
    add("case", true, "name", false, false,
        with(body_data_defs(), {{"description", kOpt},
                                {"if-feature", kAny},
                                {"reference", kOpt},
                                {"status", kOpt},
                                {"when", kOpt}}));
    add("anyxml", true, "name", false, false,
        {{"config", kOpt},
         {"description", kOpt},
         {"if-feature", kAny},
         {"mandatory", kOpt},
         {"must", kAny},
         {"reference", kOpt},
         {"status", kOpt},
         {"when", kOpt}});
    add("grouping", true, "name", false, false,
        with(body_data_defs(), {{"description", kOpt},
                                {"grouping", kAny},
                                {"reference", kOpt},
                                {"status", kOpt},
                                {"typedef", kAny}}));
    add("uses", true, "name", false, false,
        {{"augment", kOpt},
         {"description", kOpt},
         {"if-feature", kAny},
         {"refine", kAny},
         {"reference", kOpt},
         {"status", kOpt},
         {"when", kOpt}});
    add("refine", true, "target-node", false, true,
        {{"config", kOpt},
         {"default", kOpt},
         {"description", kOpt},
         {"mandatory", kOpt},
         {"max-elements", kOpt},
         {"min-elements", kOpt},
         {"must", kAny},
         {"presence", kOpt},
         {"reference", kOpt}});
    add("augment", true, "target-node", false, true,
        {{"anyxml", kAny},
         {"case", kAny},
         {"choice", kAny},
         {"container", kAny},
         {"description", kOpt},
         {"if-feature", kAny},
         {"leaf", kAny},
         {"leaf-list", kAny},
         {"list", kAny},
         {"reference", kOpt},
         {"status", kOpt},
         {"uses", kAny},
         {"when", kOpt}});

    add("rpc", true, "name", false, false,
        {{"description", kOpt},
         {"grouping", kAny},
         {"if-feature", kAny},
         {"input", kOpt},
         {"output", kOpt},
         {"reference", kOpt},
         {"status", kOpt},
         {"typedef", kAny}});
    add("input", false, "", false, false,
        with(body_data_defs(), {{"grouping", kAny}, {"typedef", kAny}}));
    add("output", false, "", false, false,
        with(body_data_defs(), {{"grouping", kAny}, {"typedef", kAny}}));
    add("notification", true, "name", false, false,
        with(body_data_defs(), {{"description", kOpt},
                                {"grouping", kAny},
                                {"if-feature", kAny},
                                {"reference", kOpt},
                                {"status", kOpt},
                                {"typedef", kAny}}));

    add("extension", true, "name", false, false,
        with(doc_only(), {{"argument", kOpt}, {"status", kOpt}}));
    add("argument", true, "name", false, false, {{"yin-element", kOpt}});
    add("yin-element", true, "value", false, false, {});
    add("feature", true, "name", false, false,
        with(doc_only(), {{"if-feature", kAny}, {"status", kOpt}}));
    add("if-feature", true, "name", false, false, {});
    add("identity", true, "name", false, false,
        with(doc_only(), {{"base", kOpt}, {"status", kOpt}}));
    add("base", true, "name", false, false, {});

    add("config", true, "value", false, false, {});
    add("default", true, "value", false, true, {});
    add("key", true, "value", false, true, {});
    add("mandatory", true, "value", false, false, {});
    add("max-elements", true, "value", false, false, {});
    add("min-elements", true, "value", false, false, {});
    add("must", true, "condition", false, true, restriction_subs());
    add("ordered-by", true, "value", false, false, {});
    add("presence", true, "value", false, true, {});
    add("status", true, "value", false, false, {});
    add("unique", true, "tag", false, true, {});
    add("when", true, "condition", false, true, {});

    add("deviation", true, "target-node", false, true,
        with(doc_only(), {{"deviate", kPlus}}));
    add("deviate", true, "value", false, false,
        {{"config", kOpt},
         {"default", kOpt},
         {"mandatory", kOpt},
         {"max-elements", kOpt},
         {"min-elements", kOpt},
         {"must", kAny},
         {"type", kOpt},
         {"unique", kAny},
         {"units", kOpt}});

    return t;
}

const std::map<std::string_view, KeywordInfo>& table() {
    static const std::map<std::string_view, KeywordInfo> t = build_table();
    return t;
}

} // namespace

const KeywordInfo* keyword_info(std::string_view keyword) {
    const auto& t = table();
    auto it = t.find(keyword);
    return it == t.end() ? nullptr : &it->second;
}

bool is_extension_keyword(std::string_view keyword) {
    return keyword.find(':') != std::string_view::npos;
}

bool is_valid_keyword(std::string_view keyword) {
    if (keyword.empty()) return false;
    auto valid_part = [](std::string_view part) {
        if (part.empty()) return false;
        if (!std::isalpha(static_cast<unsigned char>(part[0])) && part[0] != '_') return false;
        return std::all_of(part.begin(), part.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                   c == '.';
        });
    };
    auto colon = keyword.find(':');
    if (colon == std::string_view::npos) return valid_part(keyword);
    if (keyword.find(':', colon + 1) != std::string_view::npos) return false;
    return valid_part(keyword.substr(0, colon)) && valid_part(keyword.substr(colon + 1));
}

bool is_data_node_keyword(std::string_view keyword) {
    return keyword == "container" || keyword == "leaf" || keyword == "leaf-list" ||
           keyword == "list" || keyword == "choice" || keyword == "case" ||
           keyword == "anyxml" || keyword == "uses" || keyword == "grouping" ||
           keyword == "notification" || keyword == "rpc";
}

bool is_composite_keyword(std::string_view keyword) {
    return keyword == "container" || keyword == "list" || keyword == "notification" ||
           keyword == "choice" || keyword == "grouping";
}

const std::vector<std::string_view>& all_keywords() {
    static const std::vector<std::string_view> kws = [] {
        std::vector<std::string_view> out;
        for (const auto& [kw, info] : table()) out.push_back(kw);
        return out;
    }();
    return kws;
}

} // namespace yangmorph
