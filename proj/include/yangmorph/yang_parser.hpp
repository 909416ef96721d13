#pragma once

#include <string_view>

#include "yangmorph/diagnostics.hpp"
#include "yangmorph/yang_ast.hpp"

namespace yangmorph {

/// Parse YANG source text into a module AST. Comments are discarded;
/// statement order is preserved exactly. Returns diagnostics with source
/// spans on malformed input (unbalanced braces, missing terminators,
/// illegal keywords, unterminated strings).
Result<YangModule> parse_yang(std::string_view text);

/// Parse a sequence of statements (no module wrapper required). Used by
/// tests and by snippet recovery during reverse mapping.
Result<std::vector<YangStatement>> parse_statements(std::string_view text);

} // namespace yangmorph
