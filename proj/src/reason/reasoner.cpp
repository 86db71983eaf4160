#include "reason/reasoner.hpp"

#include <cctype>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rdf/vocab.hpp"
#include "support/error.hpp"

namespace saas::reasoning {

using rdf::Graph;
using rdf::PatternTerm;
using rdf::Term;
using rdf::Triple;
using rdf::TriplePattern;
using rdf::Variable;

namespace {

PatternTerm var(const char* name) { return Variable{name}; }
PatternTerm iri(const char* value) { return Term::iri(value); }

std::set<std::string> pattern_variables(const std::vector<TriplePattern>& patterns) {
    std::set<std::string> out;
    for (const auto& p : patterns) {
        for (const PatternTerm* pt : {&p.subject, &p.predicate, &p.object}) {
            if (const auto* v = std::get_if<Variable>(pt)) out.insert(v->name);
        }
    }
    return out;
}

}  // namespace

void validate_rule(const Rule& rule) {
    if (rule.premises.empty() || rule.conclusions.empty()) {
        throw Error(ErrorCode::InvalidArgument, "rule needs at least one premise and conclusion");
    }
    for (const auto& p : rule.premises) {
        if (const Term* t = std::get_if<Term>(&p.predicate); t && t->is_literal()) {
            throw Error(ErrorCode::InvalidArgument, "literal in predicate position");
        }
    }
    std::set<std::string> bound = pattern_variables(rule.premises);
    for (const std::string& v : pattern_variables(rule.conclusions)) {
        if (!bound.contains(v)) {
            throw Error(ErrorCode::UnsafeRule, "unsafe rule: conclusion variable ?" + v +
                                                   " is not bound by any premise");
        }
    }
}

RuleSet builtin_ruleset(BuiltinRules which) {
    const char* kSubClassOf = vocab::rdfs::kSubClassOf;
    const char* kType = vocab::rdf::kType;
    const char* kSameAs = vocab::owl::kSameAs;

    auto same_as_rules = [&] {
        std::vector<Rule> rules;
        // symmetry
        rules.push_back(Rule{{{var("a"), iri(kSameAs), var("b")}},
                             {{var("b"), iri(kSameAs), var("a")}}});
        // transitivity
        rules.push_back(Rule{{{var("a"), iri(kSameAs), var("b")},
                              {var("b"), iri(kSameAs), var("c")}},
                             {{var("a"), iri(kSameAs), var("c")}}});
        // replaceability: same instances share all properties, both ways
        rules.push_back(Rule{{{var("a"), iri(kSameAs), var("b")},
                              {var("a"), var("p"), var("o")}},
                             {{var("b"), var("p"), var("o")}}});
        rules.push_back(Rule{{{var("a"), iri(kSameAs), var("b")},
                              {var("s"), var("p"), var("a")}},
                             {{var("s"), var("p"), var("b")}}});
        return rules;
    };
    auto subclass_rules = [&] {
        std::vector<Rule> rules;
        // rdfs9: instance propagation along subclass links
        rules.push_back(Rule{{{var("c"), iri(kSubClassOf), var("d")},
                              {var("x"), iri(kType), var("c")}},
                             {{var("x"), iri(kType), var("d")}}});
        // rdfs11: subclass transitivity
        rules.push_back(Rule{{{var("c"), iri(kSubClassOf), var("d")},
                              {var("d"), iri(kSubClassOf), var("e")}},
                             {{var("c"), iri(kSubClassOf), var("e")}}});
        return rules;
    };

    RuleSet rs;
    switch (which) {
        case BuiltinRules::SameAs:
            rs.name = "sameas";
            rs.rules = same_as_rules();
            break;
        case BuiltinRules::SubClassOf:
            rs.name = "subclass";
            rs.rules = subclass_rules();
            break;
        case BuiltinRules::Both: {
            rs.name = "both";
            rs.rules = same_as_rules();
            for (auto& r : subclass_rules()) rs.rules.push_back(std::move(r));
            break;
        }
    }
    return rs;
}

std::string SaturationStats::summary() const {
    std::ostringstream out;
    out << "added=" << added_triples << " passes=" << passes << " ms=" << duration_ms;
    return out.str();
}

namespace {

using Bindings = std::unordered_map<std::string, Term>;

PatternTerm substitute(const PatternTerm& p, const Bindings& b) {
    if (const auto* v = std::get_if<Variable>(&p)) {
        auto it = b.find(v->name);
        if (it != b.end()) return it->second;
    }
    return p;
}

TriplePattern substitute(const TriplePattern& p, const Bindings& b) {
    return {substitute(p.subject, b), substitute(p.predicate, b), substitute(p.object, b)};
}

// Grounds a conclusion; returns false when the binding yields an ill-formed
// triple (literal subject, non-IRI predicate).
bool ground(const TriplePattern& pattern, const Bindings& b, std::vector<Triple>& out) {
    TriplePattern g = substitute(pattern, b);
    const Term* s = std::get_if<Term>(&g.subject);
    const Term* p = std::get_if<Term>(&g.predicate);
    const Term* o = std::get_if<Term>(&g.object);
    if (!s || !p || !o) {
        throw Error(ErrorCode::Internal, "conclusion variable left unbound (rule not validated?)");
    }
    if (s->is_literal() || !p->is_iri()) return false;
    out.emplace_back(*s, *p, *o);
    return true;
}

// Extends each solution by matching one premise against either the working
// graph or the delta slice.
void extend_solutions(const TriplePattern& premise, const Graph& working,
                      const std::vector<Triple>* delta, std::vector<Bindings>& solutions) {
    std::vector<Bindings> next;
    for (const Bindings& sol : solutions) {
        TriplePattern bound = substitute(premise, sol);
        auto candidates = delta ? *delta : working.match(bound);
        for (const Triple& t : candidates) {
            Bindings extended = sol;
            if (rdf::unify_triple(bound, t, extended)) {
                next.push_back(std::move(extended));
            }
        }
    }
    solutions = std::move(next);
}

}  // namespace

std::pair<Graph, SaturationStats> saturate(const Graph& g, const RuleSet& rules,
                                           const Graph& ontology,
                                           const SaturationOptions& options) {
    auto start = std::chrono::steady_clock::now();
    for (const Rule& r : rules.rules) validate_rule(r);

    // Working set: data plus the ontology's schema axioms.
    Graph working(g);
    for (const Triple* t : ontology.triples()) {
        const std::string& p = t->predicate.value();
        if (p == vocab::rdfs::kSubClassOf || p == vocab::rdf::kType || p == vocab::owl::kSameAs) {
            working.insert(*t);
        }
    }

    Graph output(g);
    std::vector<Triple> delta;
    delta.reserve(working.size());
    for (const Triple* t : working.triples()) delta.push_back(*t);

    SaturationStats stats;
    bool first_pass = true;
    while (!delta.empty()) {
        ++stats.passes;
        std::vector<Triple> next_delta;
        std::vector<Triple> grounded;
        for (const Rule& rule : rules.rules) {
            // Semi-naive: at least one premise must match a delta triple. On
            // the first pass delta equals the working set, one focus suffices.
            std::size_t focus_count = first_pass ? 1 : rule.premises.size();
            for (std::size_t focus = 0; focus < focus_count; ++focus) {
                std::vector<Bindings> solutions(1);
                for (std::size_t j = 0; j < rule.premises.size(); ++j) {
                    extend_solutions(rule.premises[j], working,
                                     j == focus ? &delta : nullptr, solutions);
                    if (solutions.empty()) break;
                }
                for (const Bindings& sol : solutions) {
                    for (const auto& conclusion : rule.conclusions) {
                        ground(conclusion, sol, grounded);
                    }
                }
            }
        }
        for (Triple& t : grounded) {
            if (working.insert(t)) {
                output.insert(t);
                next_delta.push_back(std::move(t));
            } else {
                // Already matchable; materialize if it came from the axioms.
                output.insert(t);
            }
        }
        if (working.size() > options.triple_cap) {
            throw Error(ErrorCode::ResourceLimit,
                        "saturation exceeded the triple cap of " +
                            std::to_string(options.triple_cap));
        }
        delta = std::move(next_delta);
        first_pass = false;
    }

    stats.added_triples = output.size() - g.size();
    stats.duration_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count());
    return {std::move(output), stats};
}

// --- rule file parsing ----------------------------------------------------

namespace {

class RuleParser {
public:
    explicit RuleParser(std::string_view doc) : doc_(doc) {
        prefixes_ = {{"rdf", vocab::kRdfNs},
                     {"rdfs", vocab::kRdfsNs},
                     {"owl", vocab::kOwlNs},
                     {"xsd", vocab::kXsdNs}};
    }

    RuleSet run() {
        RuleSet rs;
        rs.name = "custom";
        while (true) {
            skip_ws();
            if (eof()) break;
            if (peek() == '@') {
                read_prefix();
                continue;
            }
            rs.rules.push_back(read_rule());
        }
        return rs;
    }

private:
    bool eof() const { return pos_ >= doc_.size(); }
    char peek() const { return doc_[pos_]; }
    char peek_at(std::size_t k) const { return pos_ + k < doc_.size() ? doc_[pos_ + k] : '\0'; }

    char next() {
        char c = doc_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& reason) const {
        throw Error(ErrorCode::RuleSyntax, "rule syntax error at " + std::to_string(line_) + ":" +
                                               std::to_string(col_) + ": " + reason);
    }

    void skip_ws() {
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

    void expect(char c, const char* what) {
        skip_ws();
        if (eof() || next() != c) fail(std::string("expected ") + what);
    }

    void read_prefix() {
        next();  // '@'
        std::string word = read_word();
        if (word != "prefix") fail("unknown directive '@" + word + "'");
        skip_ws();
        std::string label;
        while (!eof() && peek() != ':') label.push_back(next());
        expect(':', "':'");
        skip_ws();
        expect('<', "'<'");
        std::string iri_text;
        while (!eof() && peek() != '>') iri_text.push_back(next());
        expect('>', "'>'");
        prefixes_[label] = iri_text;
        expect('.', "'.'");
    }

    std::string read_word() {
        std::string w;
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek())) != 0) w.push_back(next());
        return w;
    }

    Rule read_rule() {
        Rule rule;
        expect('{', "'{' opening premises");
        rule.premises = read_pattern_block();
        skip_ws();
        if (eof() || next() != '=' || eof() || next() != '>') fail("expected '=>'");
        expect('{', "'{' opening conclusions");
        rule.conclusions = read_pattern_block();
        expect('.', "'.' closing rule");
        try {
            validate_rule(rule);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UnsafeRule) throw;
            fail(e.what());
        }
        return rule;
    }

    std::vector<TriplePattern> read_pattern_block() {
        std::vector<TriplePattern> out;
        while (true) {
            skip_ws();
            if (eof()) fail("unterminated pattern block");
            if (peek() == '}') {
                next();
                break;
            }
            PatternTerm s = read_term();
            PatternTerm p = read_term();
            PatternTerm o = read_term();
            expect('.', "'.' after pattern");
            out.push_back({std::move(s), std::move(p), std::move(o)});
        }
        return out;
    }

    PatternTerm read_term() {
        skip_ws();
        if (eof()) fail("expected term");
        char c = peek();
        if (c == '?') {
            next();
            std::string name;
            while (!eof() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '_')) {
                name.push_back(next());
            }
            if (name.empty()) fail("empty variable name");
            return Variable{name};
        }
        if (c == '<') {
            next();
            std::string iri_text;
            while (!eof() && peek() != '>') iri_text.push_back(next());
            expect('>', "'>'");
            return make_iri(iri_text);
        }
        if (c == '"') {
            next();
            std::string lex;
            while (!eof() && peek() != '"') {
                char ch = next();
                if (ch == '\\' && !eof()) {
                    char e = next();
                    switch (e) {
                        case 'n': lex.push_back('\n'); break;
                        case 't': lex.push_back('\t'); break;
                        case 'r': lex.push_back('\r'); break;
                        case '"': lex.push_back('"'); break;
                        case '\\': lex.push_back('\\'); break;
                        default: fail("unknown escape in literal");
                    }
                } else {
                    lex.push_back(ch);
                }
            }
            expect('"', "closing '\"'");
            if (!eof() && peek() == '@') {
                next();
                std::string tag;
                while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 ||
                                  peek() == '-')) {
                    tag.push_back(next());
                }
                return Term::lang_literal(lex, tag);
            }
            if (!eof() && peek() == '^' && peek_at(1) == '^') {
                next();
                next();
                skip_ws();
                PatternTerm dt = read_term();
                const Term* dt_term = std::get_if<Term>(&dt);
                if (!dt_term || !dt_term->is_iri()) fail("datatype must be an IRI");
                return Term::literal(lex, dt_term->value());
            }
            return Term::literal(lex);
        }
        if (c == 'a' && (peek_at(1) == ' ' || peek_at(1) == '\t')) {
            next();
            return Term::iri(vocab::rdf::kType);
        }
        // prefixed name
        std::string label;
        while (!eof() && peek() != ':') {
            char ch = peek();
            if (std::isalnum(static_cast<unsigned char>(ch)) == 0 && ch != '_' && ch != '-') {
                fail("expected term");
            }
            label.push_back(next());
        }
        expect(':', "':' in prefixed name");
        auto it = prefixes_.find(label);
        if (it == prefixes_.end()) fail("undefined prefix '" + label + ":'");
        std::string local;
        while (!eof()) {
            char ch = peek();
            if (std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_' || ch == '-') {
                local.push_back(next());
            } else {
                break;
            }
        }
        return make_iri(it->second + local);
    }

    Term make_iri(const std::string& text) {
        try {
            return Term::iri(text);
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    std::string_view doc_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::map<std::string, std::string> prefixes_;
};

}  // namespace

RuleSet load_rules(std::string_view doc) { return RuleParser(doc).run(); }

}  // namespace saas::reasoning
