#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace yangmorph {

/// Per-keyword grammar facts for the RFC 6020 statement set: whether the
/// statement takes an argument, how the argument is encoded in YIN, and
/// which substatements are allowed with which cardinality.
struct Cardinality {
    int min = 0;
    int max = -1; // -1 means unbounded
};

struct SubstatementRule {
    std::string_view keyword;
    Cardinality cardinality;
};

struct KeywordInfo {
    std::string_view keyword;
    bool takes_argument = true;
    std::string_view yin_argument;   // attribute/element name for the argument
    bool yin_element = false;        // true: argument as child element text
    bool quoted_argument = false;    // canonical emitter always quotes
    std::vector<SubstatementRule> substatements;
};

/// Lookup for a core (unprefixed) keyword; nullptr when unknown.
const KeywordInfo* keyword_info(std::string_view keyword);

/// True for `prefix:keyword` extension statements.
bool is_extension_keyword(std::string_view keyword);

/// Lexical check for statement keywords (plain or single-prefixed).
bool is_valid_keyword(std::string_view keyword);

/// Schema data nodes the classifier operates on.
bool is_data_node_keyword(std::string_view keyword);

/// Composite data nodes that may classify as class/datatype/prefix.
bool is_composite_keyword(std::string_view keyword);

/// All core keywords, in a fixed order (for tests and tooling).
const std::vector<std::string_view>& all_keywords();

} // namespace yangmorph
