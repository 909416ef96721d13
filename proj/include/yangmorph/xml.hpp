#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yangmorph/diagnostics.hpp"

namespace yangmorph::xml {

/// Minimal XML document tree: ordered attributes, ordered element
/// children, concatenated text content. Covers the YIN and XMI subset this
/// project reads and writes; no namespaces resolution, no DTDs.
struct Node {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<Node> children;
    std::string text;

    const std::string* attribute(std::string_view key) const {
        for (const auto& [k, v] : attributes) {
            if (k == key) return &v;
        }
        return nullptr;
    }
    void set_attribute(std::string key, std::string value) {
        attributes.emplace_back(std::move(key), std::move(value));
    }
    const Node* child(std::string_view name_) const {
        for (const auto& c : children) {
            if (c.name == name_) return &c;
        }
        return nullptr;
    }
};

/// Parse a document and return its root element. XML declarations,
/// comments and processing instructions are skipped.
Result<Node> parse(std::string_view text);

/// Serialize with a declaration header. Elements carrying text are written
/// inline so text content round-trips byte-exactly.
std::string write(const Node& root);

} // namespace yangmorph::xml
