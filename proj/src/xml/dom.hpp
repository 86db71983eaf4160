#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace saas::xml {

// Namespace-aware element tree. Element matching throughout the toolchain is
// by local name; the resolved namespace IRI is kept for callers that care.
struct Element {
    std::string ns;
    std::string local;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<Element> children;
    std::string text;   // concatenated character data, surrounding whitespace trimmed
    bool mixed = false; // non-whitespace text interleaved with element children
    std::size_t line = 0;

    const Element* find(std::string_view local_name) const;
    std::vector<const Element*> find_all(std::string_view local_name) const;
    // Attribute by local name; empty string when absent.
    std::string attr(std::string_view name) const;
};

// Throws Error(XmlSyntax) with "line:col" on malformed input.
Element parse_document(std::string_view bytes);

struct Metrics {
    std::uint64_t node_count = 0;  // element nodes
    std::uint64_t leaf_count = 0;  // element nodes without element children
};

Metrics metrics(const Element& root);

}  // namespace saas::xml
