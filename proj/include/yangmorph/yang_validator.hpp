#pragma once

#include <vector>

#include "yangmorph/diagnostics.hpp"
#include "yangmorph/yang_ast.hpp"

namespace yangmorph {

/// Structural validation against the RFC 6020 substatement tables:
/// argument presence, allowed substatements and their cardinalities, plus
/// the config-true-list-requires-key rule. Unknown core keywords are
/// Errors; unknown prefixed (extension) keywords are Warnings.
std::vector<Diagnostic> validate(const YangModule& module);

} // namespace yangmorph
