#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aas/model.hpp"
#include "xml/dom.hpp"

namespace saas::aas {

// Parses an aasenv XML document. Throws Error(XmlSyntax) on malformed XML
// and Error(SchemaViolation) when mandatory children are missing.
AasEnvironment parse_environment(std::string_view doc);

struct AasxEntry {
    std::string name;
    std::string bytes;
};

// Every ".xml" entry of the ZIP container whose root element's local name is
// "aasenv", in archive order. Throws NotAnArchive / NoEnvironmentFound.
std::vector<AasxEntry> extract_aasx(std::string_view archive);

// Element-node and leaf counts of a well-formed XML document.
xml::Metrics xml_metrics(std::string_view doc);

// Convenience: parse a .xml document or the first environment of an .aasx
// container, deciding by content sniffing.
AasEnvironment open_environment(std::string_view bytes);

}  // namespace saas::aas
