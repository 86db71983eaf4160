#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "rdf/term.hpp"

namespace saas::rdf {

struct Variable {
    std::string name;
    friend auto operator<=>(const Variable&, const Variable&) = default;
    friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

// A triple pattern: concrete terms or named variables. A variable repeated
// within the pattern must bind to equal terms.
struct TriplePattern {
    PatternTerm subject;
    PatternTerm predicate;
    PatternTerm object;

    friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

inline TriplePattern any_pattern() {
    return {Variable{"s"}, Variable{"p"}, Variable{"o"}};
}

// Unifies the pattern against a triple, extending bindings in place.
// Returns false on mismatch (bindings are then unspecified).
bool unify_triple(const TriplePattern& pattern, const Triple& t,
                  std::unordered_map<std::string, Term>& bindings);

// Deduplicating triple set with a prefix table. Iteration follows insertion
// order; subject/predicate/object indexes back pattern matching.
class Graph {
public:
    Graph() = default;
    Graph(const Graph& other);
    Graph(Graph&&) noexcept = default;
    Graph& operator=(const Graph& other);
    Graph& operator=(Graph&&) noexcept = default;

    // Returns true iff the triple was not already present.
    bool insert(Triple t);

    bool contains(const Triple& t) const { return set_.contains(t); }
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }

    // Triples in insertion order.
    const std::vector<const Triple*>& triples() const { return order_; }

    std::vector<Triple> match(const TriplePattern& pattern) const;

    // Label -> namespace IRI. Re-binding a label overwrites.
    void set_prefix(const std::string& label, const std::string& ns_iri);
    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

    // Fresh blank node, unique within this graph's construction session.
    Term fresh_blank();

    bool operator==(const Graph& other) const;

private:
    std::unordered_set<Triple, TripleHash> set_;
    std::vector<const Triple*> order_;
    std::unordered_map<Term, std::vector<const Triple*>, TermHash> by_subject_;
    std::unordered_map<Term, std::vector<const Triple*>, TermHash> by_predicate_;
    std::unordered_map<Term, std::vector<const Triple*>, TermHash> by_object_;
    std::map<std::string, std::string> prefixes_;
    std::uint64_t blank_counter_ = 0;
};

// Triple-set union. Prefixes: g's bindings win on conflicting labels; each
// conflict appends one line to warnings when given.
Graph merge(const Graph& g, const Graph& h, std::vector<std::string>* warnings = nullptr);

}  // namespace saas::rdf
