#pragma once

#include <string>
#include <string_view>

#include "rdf/graph.hpp"

namespace saas::rdf {

enum class Format { NTriples, NQuads, Turtle, RdfXml, JsonLd };

// "nt", "nq", "ttl", "rdfxml", "jsonld" (also accepts the file extensions
// ".nt" ... ".rdf" ".jsonld"). Throws Error(InvalidArgument) otherwise.
Format format_from_name(std::string_view name);

// File extension without the dot.
const char* format_extension(Format fmt);

// Serializes the graph. N-Triples/N-Quads output is canonical: one triple
// per line, lines sorted lexicographically, LF endings, UTF-8. The store is
// quad-free, so N-Quads equals N-Triples (default graph only).
std::string serialize(const Graph& g, Format fmt);

// N-Triples rendering of a single term (also used in reports).
std::string render_term_nt(const Term& t);

// Parses N-Triples or Turtle. Throws Error(RdfSyntax) with line/column in
// the message. Other formats are write-only.
Graph parse(std::string_view doc, Format fmt);

}  // namespace saas::rdf
