#include <cctype>
#include <cstdint>
#include <optional>
#include <string>

#include "rdf/serialize.hpp"
#include "rdf/vocab.hpp"
#include "support/error.hpp"

namespace saas::rdf {

namespace {

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& reason) {
    throw Error(ErrorCode::RdfSyntax, "syntax error at " + std::to_string(line) + ":" +
                                          std::to_string(col) + ": " + reason);
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp <= 0x7f) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7ff) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp <= 0xffff) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

// Character cursor shared by both parsers.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char peek_at(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char next() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') next();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                next();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& reason) const { syntax_error(line_, col_, reason); }

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::uint32_t read_hex(Cursor& c, int digits) {
    std::uint32_t v = 0;
    for (int i = 0; i < digits; ++i) {
        if (c.eof()) c.fail("unterminated \\u escape");
        char h = c.next();
        v <<= 4;
        if (h >= '0' && h <= '9') v |= static_cast<std::uint32_t>(h - '0');
        else if (h >= 'a' && h <= 'f') v |= static_cast<std::uint32_t>(h - 'a' + 10);
        else if (h >= 'A' && h <= 'F') v |= static_cast<std::uint32_t>(h - 'A' + 10);
        else c.fail("invalid hex digit in escape");
    }
    return v;
}

// Reads the body of a quoted string after the opening '"'.
std::string read_string_body(Cursor& c) {
    std::string out;
    while (true) {
        if (c.eof()) c.fail("unterminated string literal");
        char ch = c.next();
        if (ch == '"') return out;
        if (ch == '\n') c.fail("newline in string literal");
        if (ch != '\\') {
            out.push_back(ch);
            continue;
        }
        if (c.eof()) c.fail("unterminated escape");
        char e = c.next();
        switch (e) {
            case 't': out.push_back('\t'); break;
            case 'b': out.push_back('\b'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            case 'f': out.push_back('\f'); break;
            case '"': out.push_back('"'); break;
            case '\'': out.push_back('\''); break;
            case '\\': out.push_back('\\'); break;
            case 'u': append_utf8(out, read_hex(c, 4)); break;
            case 'U': append_utf8(out, read_hex(c, 8)); break;
            default: c.fail(std::string("unknown escape '\\") + e + "'");
        }
    }
}

// Reads an IRIREF body after '<'; supports \u escapes, validates strictly.
Term read_iri_ref(Cursor& c) {
    std::string iri;
    while (true) {
        if (c.eof()) c.fail("unterminated IRI");
        char ch = c.next();
        if (ch == '>') break;
        if (ch == '\\') {
            if (c.eof()) c.fail("unterminated escape in IRI");
            char e = c.next();
            if (e == 'u') append_utf8(iri, read_hex(c, 4));
            else if (e == 'U') append_utf8(iri, read_hex(c, 8));
            else c.fail("invalid escape in IRI");
            continue;
        }
        iri.push_back(ch);
    }
    try {
        return Term::iri(std::move(iri));
    } catch (const Error& e) {
        c.fail(e.what());
    }
}

std::string read_lang_tag(Cursor& c) {
    std::string tag;
    while (!c.eof()) {
        char ch = c.peek();
        if (std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '-') {
            tag.push_back(c.next());
        } else {
            break;
        }
    }
    if (tag.empty()) c.fail("empty language tag");
    return tag;
}

std::string read_blank_label(Cursor& c) {
    // caller consumed "_:"
    std::string label;
    while (!c.eof()) {
        char ch = c.peek();
        if (std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_' || ch == '-') {
            label.push_back(c.next());
        } else {
            break;
        }
    }
    if (label.empty()) c.fail("empty blank node label");
    return label;
}

// --- N-Triples ---------------------------------------------------------

Term read_nt_term(Cursor& c) {
    c.skip_ws_and_comments();
    if (c.eof()) c.fail("unexpected end of input");
    char ch = c.peek();
    if (ch == '<') {
        c.next();
        return read_iri_ref(c);
    }
    if (ch == '_') {
        c.next();
        if (c.eof() || c.next() != ':') c.fail("expected ':' after '_'");
        return Term::blank(read_blank_label(c));
    }
    if (ch == '"') {
        c.next();
        std::string lex = read_string_body(c);
        if (!c.eof() && c.peek() == '@') {
            c.next();
            return Term::lang_literal(std::move(lex), read_lang_tag(c));
        }
        if (!c.eof() && c.peek() == '^') {
            c.next();
            if (c.eof() || c.next() != '^') c.fail("expected '^^'");
            c.skip_ws_and_comments();
            if (c.eof() || c.next() != '<') c.fail("expected datatype IRI");
            Term dt = read_iri_ref(c);
            if (dt.value() == vocab::rdf::kLangString) {
                c.fail("rdf:langString literal without language tag");
            }
            return Term::literal(std::move(lex), dt.value());
        }
        return Term::literal(std::move(lex));
    }
    c.fail(std::string("unexpected character '") + ch + "'");
}

Graph parse_ntriples(std::string_view doc) {
    Graph g;
    Cursor c(doc);
    while (true) {
        c.skip_ws_and_comments();
        if (c.eof()) break;
        Term s = read_nt_term(c);
        Term p = read_nt_term(c);
        if (!p.is_iri()) c.fail("predicate must be an IRI");
        if (s.is_literal()) c.fail("subject must not be a literal");
        Term o = read_nt_term(c);
        c.skip_ws_and_comments();
        if (c.eof() || c.next() != '.') c.fail("expected '.' after triple");
        g.insert(Triple(std::move(s), std::move(p), std::move(o)));
    }
    return g;
}

// --- Turtle -------------------------------------------------------------

class TurtleParser {
public:
    explicit TurtleParser(std::string_view doc) : c_(doc) {
        g_.set_prefix("rdf", vocab::kRdfNs);
        g_.set_prefix("rdfs", vocab::kRdfsNs);
        g_.set_prefix("owl", vocab::kOwlNs);
        g_.set_prefix("xsd", vocab::kXsdNs);
        prefixes_ = {{"rdf", vocab::kRdfNs},
                     {"rdfs", vocab::kRdfsNs},
                     {"owl", vocab::kOwlNs},
                     {"xsd", vocab::kXsdNs}};
    }

    Graph run() {
        while (true) {
            c_.skip_ws_and_comments();
            if (c_.eof()) break;
            if (c_.peek() == '@') {
                read_directive();
                continue;
            }
            read_statement();
        }
        return std::move(g_);
    }

private:
    void expect(char ch, const char* what) {
        c_.skip_ws_and_comments();
        if (c_.eof() || c_.next() != ch) c_.fail(std::string("expected ") + what);
    }

    void read_directive() {
        c_.next();  // '@'
        std::string word;
        while (!c_.eof() && std::isalpha(static_cast<unsigned char>(c_.peek())) != 0) {
            word.push_back(c_.next());
        }
        if (word == "prefix") {
            c_.skip_ws_and_comments();
            std::string label;
            while (!c_.eof() && c_.peek() != ':') {
                char ch = c_.peek();
                if (std::isalnum(static_cast<unsigned char>(ch)) == 0 && ch != '_' && ch != '-') {
                    c_.fail("invalid prefix label");
                }
                label.push_back(c_.next());
            }
            expect(':', "':' in @prefix");
            c_.skip_ws_and_comments();
            expect('<', "namespace IRI");
            Term ns = read_iri_ref(c_);
            prefixes_[label] = ns.value();
            g_.set_prefix(label, ns.value());
            expect('.', "'.' after @prefix");
            return;
        }
        if (word == "base") c_.fail("@base is not supported (use absolute IRIs)");
        c_.fail("unknown directive '@" + word + "'");
    }

    void read_statement() {
        Term subject = read_subject();
        read_predicate_object_list(subject);
        expect('.', "'.' after statement");
    }

    Term read_subject() {
        c_.skip_ws_and_comments();
        if (c_.eof()) c_.fail("expected subject");
        char ch = c_.peek();
        if (ch == '<') {
            c_.next();
            return read_iri_ref(c_);
        }
        if (ch == '_') {
            c_.next();
            if (c_.eof() || c_.next() != ':') c_.fail("expected ':' after '_'");
            return Term::blank(read_blank_label(c_));
        }
        if (ch == '[') {
            c_.next();
            Term node = g_.fresh_blank();
            c_.skip_ws_and_comments();
            if (!c_.eof() && c_.peek() == ']') {
                c_.next();
                return node;
            }
            read_predicate_object_list(node);
            expect(']', "']' closing blank node");
            return node;
        }
        if (ch == '(') c_.fail("RDF collections are not supported");
        return read_prefixed_name();
    }

    void read_predicate_object_list(const Term& subject) {
        while (true) {
            c_.skip_ws_and_comments();
            Term predicate = read_verb();
            while (true) {
                Term object = read_object();
                g_.insert(Triple(subject, predicate, object));
                c_.skip_ws_and_comments();
                if (!c_.eof() && c_.peek() == ',') {
                    c_.next();
                    continue;
                }
                break;
            }
            c_.skip_ws_and_comments();
            if (!c_.eof() && c_.peek() == ';') {
                c_.next();
                c_.skip_ws_and_comments();
                // trailing ';' before '.' or ']' is legal
                if (!c_.eof() && (c_.peek() == '.' || c_.peek() == ']')) break;
                continue;
            }
            break;
        }
    }

    Term read_verb() {
        c_.skip_ws_and_comments();
        if (c_.eof()) c_.fail("expected predicate");
        char ch = c_.peek();
        if (ch == 'a') {
            // bare 'a' only when followed by a delimiter
            char after = c_.peek_at(1);
            if (after == ' ' || after == '\t' || after == '\r' || after == '\n' ||
                after == '<' || after == '[' || after == '"' || after == '_') {
                c_.next();
                return Term::iri(vocab::rdf::kType);
            }
        }
        if (ch == '<') {
            c_.next();
            return read_iri_ref(c_);
        }
        Term t = read_prefixed_name();
        if (!t.is_iri()) c_.fail("predicate must be an IRI");
        return t;
    }

    Term read_object() {
        c_.skip_ws_and_comments();
        if (c_.eof()) c_.fail("expected object");
        char ch = c_.peek();
        if (ch == '<') {
            c_.next();
            return read_iri_ref(c_);
        }
        if (ch == '_') {
            c_.next();
            if (c_.eof() || c_.next() != ':') c_.fail("expected ':' after '_'");
            return Term::blank(read_blank_label(c_));
        }
        if (ch == '[') {
            c_.next();
            Term node = g_.fresh_blank();
            c_.skip_ws_and_comments();
            if (!c_.eof() && c_.peek() == ']') {
                c_.next();
                return node;
            }
            read_predicate_object_list(node);
            expect(']', "']' closing blank node");
            return node;
        }
        if (ch == '(') c_.fail("RDF collections are not supported");
        if (ch == '"') {
            c_.next();
            if (c_.peek() == '"' && c_.peek_at(1) == '"') {
                c_.fail("triple-quoted strings are not supported");
            }
            std::string lex = read_string_body(c_);
            if (!c_.eof() && c_.peek() == '@') {
                c_.next();
                return Term::lang_literal(std::move(lex), read_lang_tag(c_));
            }
            if (!c_.eof() && c_.peek() == '^') {
                c_.next();
                if (c_.eof() || c_.next() != '^') c_.fail("expected '^^'");
                c_.skip_ws_and_comments();
                Term dt;
                if (!c_.eof() && c_.peek() == '<') {
                    c_.next();
                    dt = read_iri_ref(c_);
                } else {
                    dt = read_prefixed_name();
                }
                if (dt.value() == vocab::rdf::kLangString) {
                    c_.fail("rdf:langString literal without language tag");
                }
                return Term::literal(std::move(lex), dt.value());
            }
            return Term::literal(std::move(lex));
        }
        if (ch == '+' || ch == '-' || std::isdigit(static_cast<unsigned char>(ch)) != 0) {
            return read_number();
        }
        if (doc_starts_with("true")) {
            consume_word("true");
            return Term::literal("true", vocab::xsd::kBoolean);
        }
        if (doc_starts_with("false")) {
            consume_word("false");
            return Term::literal("false", vocab::xsd::kBoolean);
        }
        return read_prefixed_name();
    }

    bool doc_starts_with(std::string_view word) {
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (c_.peek_at(i) != word[i]) return false;
        }
        char after = c_.peek_at(word.size());
        return after == '\0' || std::isalnum(static_cast<unsigned char>(after)) == 0;
    }

    void consume_word(std::string_view word) {
        for (std::size_t i = 0; i < word.size(); ++i) c_.next();
    }

    Term read_number() {
        std::string text;
        bool has_dot = false;
        bool has_exp = false;
        if (c_.peek() == '+' || c_.peek() == '-') text.push_back(c_.next());
        while (!c_.eof()) {
            char ch = c_.peek();
            if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
                text.push_back(c_.next());
            } else if (ch == '.' && !has_dot && !has_exp &&
                       std::isdigit(static_cast<unsigned char>(c_.peek_at(1))) != 0) {
                has_dot = true;
                text.push_back(c_.next());
            } else if ((ch == 'e' || ch == 'E') && !has_exp) {
                has_exp = true;
                text.push_back(c_.next());
                if (!c_.eof() && (c_.peek() == '+' || c_.peek() == '-')) text.push_back(c_.next());
            } else {
                break;
            }
        }
        if (text.empty() || text == "+" || text == "-") c_.fail("invalid number");
        const char* dt = has_exp   ? vocab::xsd::kDouble
                         : has_dot ? vocab::xsd::kDecimal
                                   : vocab::xsd::kInteger;
        return Term::literal(std::move(text), dt);
    }

    Term read_prefixed_name() {
        std::string label;
        while (!c_.eof() && c_.peek() != ':') {
            char ch = c_.peek();
            if (std::isalnum(static_cast<unsigned char>(ch)) == 0 && ch != '_' && ch != '-') {
                break;
            }
            label.push_back(c_.next());
        }
        if (c_.eof() || c_.peek() != ':') {
            c_.fail("expected prefixed name");
        }
        c_.next();  // ':'
        auto it = prefixes_.find(label);
        if (it == prefixes_.end()) c_.fail("undefined prefix '" + label + ":'");

        auto is_local_char = [](char ch) {
            return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_' ||
                   ch == '-' || ch == '%' || static_cast<unsigned char>(ch) >= 0x80;
        };
        std::string local;
        while (!c_.eof()) {
            char ch = c_.peek();
            if (is_local_char(ch)) {
                local.push_back(c_.next());
                continue;
            }
            // '.' belongs to the name only when another name char follows;
            // otherwise it terminates the statement.
            if (ch == '.' && (is_local_char(c_.peek_at(1)) || c_.peek_at(1) == '.')) {
                local.push_back(c_.next());
                continue;
            }
            break;
        }
        std::string iri = it->second + local;
        try {
            return Term::iri(std::move(iri));
        } catch (const Error& e) {
            c_.fail(e.what());
        }
    }

    Cursor c_;
    Graph g_;
    std::map<std::string, std::string> prefixes_;
};

Graph parse_turtle(std::string_view doc) {
    TurtleParser p(doc);
    return p.run();
}

}  // namespace

Graph parse(std::string_view doc, Format fmt) {
    switch (fmt) {
        case Format::NTriples:
        case Format::NQuads:
            return parse_ntriples(doc);
        case Format::Turtle:
            return parse_turtle(doc);
        default:
            throw Error(ErrorCode::InvalidArgument,
                        "parsing is supported for N-Triples and Turtle only");
    }
}

}  // namespace saas::rdf
