#include "rdf/term.hpp"

#include <array>
#include <cctype>

#include "rdf/vocab.hpp"
#include "support/error.hpp"

namespace saas::rdf {

namespace {

bool is_scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool is_scheme_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' || c == '-' || c == '.';
}

bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

// ASCII characters permitted in an IRI body besides alphanumerics:
// unreserved punctuation, gen-delims and sub-delims. '%' and '#' are
// handled separately.
bool is_iri_ascii(char c) {
    switch (c) {
        case '-': case '.': case '_': case '~':
        case ':': case '/': case '?': case '[': case ']': case '@':
        case '!': case '$': case '&': case '\'': case '(': case ')':
        case '*': case '+': case ',': case ';': case '=':
            return true;
        default:
            return std::isalnum(static_cast<unsigned char>(c)) != 0;
    }
}

// Decodes one UTF-8 sequence starting at i; returns the code point and
// advances i past it, or returns -1 on malformed input.
long decode_utf8(std::string_view s, std::size_t& i) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    int len = 0;
    long cp = 0;
    if ((b0 & 0xe0) == 0xc0) {
        len = 2;
        cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
        len = 3;
        cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return -1;
    }
    if (i + len > s.size()) return -1;
    for (int k = 1; k < len; ++k) {
        unsigned char b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xc0) != 0x80) return -1;
        cp = (cp << 6) | (b & 0x3f);
    }
    static const long kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinByLen[len] || cp > 0x10ffff) return -1;
    i += len;
    return cp;
}

}  // namespace

std::string check_iri(std::string_view value) {
    if (value.empty()) return "empty string";

    // Scheme part.
    std::size_t colon = value.find(':');
    if (colon == std::string_view::npos) return "no scheme (missing ':')";
    if (colon == 0) return "empty scheme";
    if (!is_scheme_start(value[0])) return "scheme must start with a letter";
    for (std::size_t i = 1; i < colon; ++i) {
        if (!is_scheme_char(value[i])) return "invalid character in scheme";
    }

    // Body: strict character-class check, no repair.
    bool seen_fragment = false;
    std::size_t i = colon + 1;
    while (i < value.size()) {
        unsigned char c = static_cast<unsigned char>(value[i]);
        if (c >= 0x80) {
            long cp = decode_utf8(value, i);
            if (cp < 0) return "malformed UTF-8 sequence";
            if (cp >= 0x80 && cp <= 0x9f) return "raw control character";
            continue;
        }
        if (c == ' ') return "raw space";
        if (c < 0x20 || c == 0x7f) return "raw control character";
        if (c == '#') {
            if (seen_fragment) return "more than one '#'";
            seen_fragment = true;
            ++i;
            continue;
        }
        if (c == '%') {
            if (i + 2 >= value.size() || !is_hex(value[i + 1]) || !is_hex(value[i + 2])) {
                return "'%' not followed by two hex digits";
            }
            i += 3;
            continue;
        }
        if (!is_iri_ascii(static_cast<char>(c))) {
            return std::string("forbidden character '") + static_cast<char>(c) + "'";
        }
        ++i;
    }
    return {};
}

std::string percent_encode_local(std::string_view value) {
    static const char* kHex = "0123456789ABCDEF";
    std::string out;
    out.reserve(value.size());
    for (unsigned char c : value) {
        bool keep = std::isalnum(c) != 0 || c == '.' || c == '_' || c == '~' || c == '-';
        if (keep) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(kHex[c >> 4]);
            out.push_back(kHex[c & 0x0f]);
        }
    }
    return out;
}

Term Term::iri(std::string value) {
    if (std::string reason = check_iri(value); !reason.empty()) {
        throw Error(ErrorCode::InvalidIri, "invalid IRI '" + value + "': " + reason);
    }
    return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::literal(std::string lexical) {
    return Term(TermKind::Literal, std::move(lexical), vocab::xsd::kString, {});
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
    if (std::string reason = check_iri(datatype_iri); !reason.empty()) {
        throw Error(ErrorCode::InvalidIri,
                    "invalid datatype IRI '" + datatype_iri + "': " + reason);
    }
    if (datatype_iri == vocab::rdf::kLangString) {
        throw Error(ErrorCode::InvalidArgument,
                    "rdf:langString literals need a language tag; use lang_literal");
    }
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype_iri), {});
}

Term Term::lang_literal(std::string lexical, std::string tag) {
    if (tag.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty language tag");
    }
    for (char& c : tag) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u) == 0 && c != '-') {
            throw Error(ErrorCode::InvalidArgument, "invalid language tag '" + tag + "'");
        }
        c = static_cast<char>(std::tolower(u));
    }
    return Term(TermKind::Literal, std::move(lexical), vocab::rdf::kLangString, std::move(tag));
}

Term Term::blank(std::string label) {
    if (label.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty blank node label");
    }
    for (char c : label) {
        if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_' && c != '-') {
            throw Error(ErrorCode::InvalidArgument, "invalid blank node label '" + label + "'");
        }
    }
    return Term(TermKind::Blank, std::move(label), {}, {});
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject.is_literal()) {
        throw Error(ErrorCode::InvalidArgument, "triple subject must not be a literal");
    }
    if (!predicate.is_iri()) {
        throw Error(ErrorCode::InvalidArgument, "triple predicate must be an IRI");
    }
}

}  // namespace saas::rdf
