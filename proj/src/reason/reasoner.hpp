#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdf/graph.hpp"

namespace saas::reasoning {

// Range-restricted rule: every conclusion variable is bound by a premise.
struct Rule {
    std::vector<rdf::TriplePattern> premises;
    std::vector<rdf::TriplePattern> conclusions;

    friend bool operator==(const Rule&, const Rule&) = default;
};

// Throws Error(UnsafeRule) naming the first unbound conclusion variable,
// Error(InvalidArgument) on empty premises/conclusions or a literal in
// predicate position.
void validate_rule(const Rule& rule);

enum class BuiltinRules { SameAs, SubClassOf, Both };

struct RuleSet {
    std::string name;  // "sameas", "subclass", "both" or "custom"
    std::vector<Rule> rules;
};

// SubClassOf carries rdfs9 + rdfs11; SameAs carries symmetry, transitivity
// and the two directional replaceability rules; Both is their union.
RuleSet builtin_ruleset(BuiltinRules which);

struct SaturationStats {
    std::uint64_t added_triples = 0;  // size(output) - size(input)
    std::uint64_t passes = 0;
    std::uint64_t duration_ms = 0;

    // "added=<n> passes=<k> ms=<t>"
    std::string summary() const;
};

struct SaturationOptions {
    std::uint64_t triple_cap = 5'000'000;  // working-set bound; throws ResourceLimit beyond
};

// Least fixpoint of the rule set over g, with the ontology's subClassOf /
// type / sameAs triples joining premise matching on the fly. Only rule
// conclusions materialize into the output; ontology axioms themselves are
// not copied. Conclusions that would not form a well-formed triple (literal
// subject or non-IRI predicate) are dropped.
std::pair<rdf::Graph, SaturationStats> saturate(const rdf::Graph& g, const RuleSet& rules,
                                                const rdf::Graph& ontology,
                                                const SaturationOptions& options = {});

// Rule file grammar, one rule per statement:
//   { ?c rdfs:subClassOf ?d . ?x rdf:type ?c . } => { ?x rdf:type ?d . } .
// '@prefix' directives as in Turtle; rdf/rdfs/owl/xsd are predeclared.
// Throws Error(RuleSyntax) / Error(UnsafeRule).
RuleSet load_rules(std::string_view doc);

}  // namespace saas::reasoning
