#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace saas::rdf {

enum class TermKind : std::uint8_t { Iri, Literal, Blank };

// One RDF term. Literals always carry a datatype IRI; language-tagged
// literals carry rdf:langString plus a lowercase tag.
class Term {
public:
    // Throws Error(InvalidIri) unless value is an absolute IRI under the
    // strict-reject policy (no implicit encoding or repair).
    static Term iri(std::string value);

    // Plain or typed literal. Datatype defaults to xsd:string.
    static Term literal(std::string lexical);
    static Term literal(std::string lexical, std::string datatype_iri);

    // Language-tagged literal; tag is lowercased and must be non-empty
    // [A-Za-z0-9-]. Datatype is forced to rdf:langString.
    static Term lang_literal(std::string lexical, std::string tag);

    static Term blank(std::string label);

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_literal() const { return kind_ == TermKind::Literal; }
    bool is_blank() const { return kind_ == TermKind::Blank; }

    // IRI string, literal lexical form, or blank label.
    const std::string& value() const { return value_; }
    // Literals only; empty otherwise.
    const std::string& datatype() const { return datatype_; }
    // Language tag, or empty when untagged.
    const std::string& language() const { return language_; }

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;

private:
    Term(TermKind kind, std::string value, std::string datatype, std::string language)
        : kind_(kind),
          value_(std::move(value)),
          datatype_(std::move(datatype)),
          language_(std::move(language)) {}

    TermKind kind_;
    std::string value_;
    std::string datatype_;
    std::string language_;
};

// Strict absolute-IRI check: scheme followed by ':', no raw spaces or control
// characters, at most one '#', '%' only as %HH, well-formed UTF-8 beyond
// ASCII. Returns an empty string when valid, otherwise the reason.
std::string check_iri(std::string_view value);

inline bool is_valid_iri(std::string_view value) { return check_iri(value).empty(); }

// Percent-encodes every byte outside [A-Za-z0-9._~-] as %HH (uppercase hex).
std::string percent_encode_local(std::string_view value);

struct TermHash {
    std::size_t operator()(const Term& t) const {
        std::size_t h = std::hash<std::string>{}(t.value());
        h ^= std::hash<std::string>{}(t.datatype()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.language()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(t.kind()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct Triple {
    // Enforces subject in {Iri, Blank} and predicate Iri.
    Triple(Term subject, Term predicate, Term object);

    Term subject;
    Term predicate;
    Term object;

    friend auto operator<=>(const Triple&, const Triple&) = default;
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const {
        TermHash h;
        std::size_t a = h(t.subject);
        a ^= h(t.predicate) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
        a ^= h(t.object) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
        return a;
    }
};

}  // namespace saas::rdf
