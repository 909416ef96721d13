#pragma once

#include <string>

#include "yangmorph/yang_ast.hpp"

namespace yangmorph {

/// Serialize an AST back to canonical YANG text: 4-space indent, one
/// statement per line, `;` for statements without substatements and
/// `{ ... }` blocks otherwise. parse_yang(emit_yang(m)) yields a
/// structurally identical module.
std::string emit_yang(const YangModule& module);

/// Serialize a single statement subtree at the given indent level.
std::string emit_statement(const YangStatement& stmt, int indent = 0);

} // namespace yangmorph
