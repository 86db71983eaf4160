#include "rdf/graph.hpp"

#include <algorithm>

namespace saas::rdf {

namespace {

// Binds one pattern position against a concrete term; bindings maps
// variable names seen earlier.
bool unify(const PatternTerm& p, const Term& t,
           std::unordered_map<std::string, Term>& bindings) {
    if (const Term* c = std::get_if<Term>(&p)) {
        return *c == t;
    }
    const auto& var = std::get<Variable>(p);
    auto [it, fresh] = bindings.emplace(var.name, t);
    return fresh || it->second == t;
}

}  // namespace

bool unify_triple(const TriplePattern& pattern, const Triple& t,
                  std::unordered_map<std::string, Term>& bindings) {
    return unify(pattern.subject, t.subject, bindings) &&
           unify(pattern.predicate, t.predicate, bindings) &&
           unify(pattern.object, t.object, bindings);
}

Graph::Graph(const Graph& other) {
    for (const Triple* t : other.order_) insert(*t);
    prefixes_ = other.prefixes_;
    blank_counter_ = other.blank_counter_;
}

Graph& Graph::operator=(const Graph& other) {
    if (this == &other) return *this;
    Graph copy(other);
    *this = std::move(copy);
    return *this;
}

bool Graph::insert(Triple t) {
    auto [it, fresh] = set_.insert(std::move(t));
    if (!fresh) return false;
    const Triple* p = &*it;
    order_.push_back(p);
    by_subject_[p->subject].push_back(p);
    by_predicate_[p->predicate].push_back(p);
    by_object_[p->object].push_back(p);
    return true;
}

std::vector<Triple> Graph::match(const TriplePattern& pattern) const {
    // Pick the narrowest index a concrete position offers.
    const std::vector<const Triple*>* candidates = &order_;
    auto narrow = [&](const PatternTerm& p,
                      const std::unordered_map<Term, std::vector<const Triple*>, TermHash>& idx) {
        if (const Term* c = std::get_if<Term>(&p)) {
            auto it = idx.find(*c);
            static const std::vector<const Triple*> kEmpty;
            const std::vector<const Triple*>* bucket = it == idx.end() ? &kEmpty : &it->second;
            if (bucket->size() < candidates->size()) candidates = bucket;
        }
    };
    narrow(pattern.subject, by_subject_);
    narrow(pattern.predicate, by_predicate_);
    narrow(pattern.object, by_object_);

    std::vector<Triple> out;
    for (const Triple* t : *candidates) {
        std::unordered_map<std::string, Term> bindings;
        if (unify_triple(pattern, *t, bindings)) out.push_back(*t);
    }
    return out;
}

void Graph::set_prefix(const std::string& label, const std::string& ns_iri) {
    prefixes_[label] = ns_iri;
}

Term Graph::fresh_blank() {
    while (true) {
        std::string label = "b" + std::to_string(blank_counter_++);
        if (!by_subject_.contains(Term::blank(label)) &&
            !by_object_.contains(Term::blank(label))) {
            return Term::blank(label);
        }
    }
}

bool Graph::operator==(const Graph& other) const {
    if (size() != other.size()) return false;
    return std::all_of(order_.begin(), order_.end(),
                       [&](const Triple* t) { return other.contains(*t); });
}

Graph merge(const Graph& g, const Graph& h, std::vector<std::string>* warnings) {
    Graph out(g);
    for (const Triple* t : h.triples()) out.insert(*t);
    for (const auto& [label, ns] : h.prefixes()) {
        auto it = out.prefixes().find(label);
        if (it == out.prefixes().end()) {
            out.set_prefix(label, ns);
        } else if (it->second != ns && warnings) {
            warnings->push_back("prefix '" + label + "' kept as <" + it->second +
                                ">, ignoring <" + ns + ">");
        }
    }
    return out;
}

}  // namespace saas::rdf
