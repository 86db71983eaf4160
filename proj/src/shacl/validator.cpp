#include "shacl/validator.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rdf/serialize.hpp"
#include "rdf/vocab.hpp"
#include "support/error.hpp"

namespace saas::shacl {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;
using rdf::Variable;

namespace {

namespace sh = vocab::sh;

std::vector<Term> objects_of(const Graph& g, const Term& subject, const char* predicate) {
    std::vector<Term> out;
    for (const auto& t : g.match({subject, Term::iri(predicate), Variable{"o"}})) {
        out.push_back(t.object);
    }
    return out;
}

std::optional<std::uint32_t> read_count(const Graph& g, const Term& node, const char* predicate,
                                        const std::string& shape_name) {
    auto values = objects_of(g, node, predicate);
    if (values.empty()) return std::nullopt;
    const Term& v = values.front();
    if (!v.is_literal()) {
        throw Error(ErrorCode::MalformedShape, shape_name + ": count constraint is not a literal");
    }
    try {
        return static_cast<std::uint32_t>(std::stoul(v.value()));
    } catch (...) {
        throw Error(ErrorCode::MalformedShape,
                    shape_name + ": count constraint '" + v.value() + "' is not an integer");
    }
}

std::string term_name(const Term& t) {
    return t.is_blank() ? "_:" + t.value() : "<" + t.value() + ">";
}

PropertyConstraint read_property_shape(const Graph& g, const Term& node,
                                       const std::string& shape_name,
                                       std::vector<std::string>& warnings) {
    PropertyConstraint c;
    auto paths = objects_of(g, node, sh::kPath);
    if (paths.empty() || !paths.front().is_iri()) {
        throw Error(ErrorCode::MalformedShape,
                    shape_name + ": property shape " + term_name(node) + " without an IRI sh:path");
    }
    c.path = paths.front().value();

    if (auto min = read_count(g, node, sh::kMinCount, shape_name)) c.min_count = *min;
    c.max_count = read_count(g, node, sh::kMaxCount, shape_name);
    if (c.max_count && *c.max_count < c.min_count) {
        throw Error(ErrorCode::MalformedShape, shape_name + ": maxCount below minCount on " +
                                                   term_name(node));
    }

    for (const Term& dt : objects_of(g, node, sh::kDatatype)) {
        if (dt.is_iri()) c.datatype = dt.value();
    }
    for (const Term& vc : objects_of(g, node, sh::kClass)) {
        if (vc.is_iri()) c.value_class = vc.value();
    }
    if (c.datatype && c.value_class) {
        throw Error(ErrorCode::MalformedShape,
                    shape_name + ": both sh:datatype and sh:class set on " + term_name(node));
    }
    for (const Term& nk : objects_of(g, node, sh::kNodeKind)) {
        if (nk.value() == sh::kIri) c.node_kind = NodeKind::IriOnly;
        else if (nk.value() == sh::kLiteral) c.node_kind = NodeKind::LiteralOnly;
        else warnings.push_back(shape_name + ": unrecognized sh:nodeKind " + term_name(nk));
    }
    for (const Term& sev : objects_of(g, node, sh::kSeverity)) {
        if (sev.value() == sh::kWarning) c.severity = Severity::Warning;
        else if (sev.value() == sh::kViolation) c.severity = Severity::Violation;
        else warnings.push_back(shape_name + ": unrecognized sh:severity " + term_name(sev));
    }

    static const std::set<std::string> known = {sh::kPath,     sh::kMinCount, sh::kMaxCount,
                                                sh::kDatatype, sh::kClass,    sh::kNodeKind,
                                                sh::kSeverity};
    for (const auto& t : g.match({node, Variable{"p"}, Variable{"o"}})) {
        const std::string& p = t.predicate.value();
        if (!known.contains(p) && p != vocab::rdf::kType) {
            warnings.push_back(shape_name + ": unrecognized constraint component <" + p + ">");
        }
    }
    return c;
}

}  // namespace

const Shape* ShapeSet::find(const std::string& class_iri) const {
    for (const Shape& s : shapes) {
        if (s.target_class == class_iri) return &s;
    }
    return nullptr;
}

ShapeSet load_shapes(const Graph& shapes_graph) {
    // Candidate node shapes; objects of sh:property are property shapes, not
    // standalone ones.
    std::set<Term> property_nodes;
    for (const auto& t :
         shapes_graph.match({Variable{"s"}, Term::iri(sh::kProperty), Variable{"o"}})) {
        property_nodes.insert(t.object);
    }
    std::set<Term> candidates;
    for (const auto& t : shapes_graph.match(
             {Variable{"s"}, Term::iri(vocab::rdf::kType), Term::iri(sh::kNodeShape)})) {
        candidates.insert(t.subject);
    }
    for (const char* p : {sh::kTargetClass, sh::kProperty}) {
        for (const auto& t : shapes_graph.match({Variable{"s"}, Term::iri(p), Variable{"o"}})) {
            if (!property_nodes.contains(t.subject)) candidates.insert(t.subject);
        }
    }

    ShapeSet out;
    for (const Term& node : candidates) {
        std::string name = term_name(node);
        auto targets = objects_of(shapes_graph, node, sh::kTargetClass);
        if (targets.empty()) {
            throw Error(ErrorCode::MalformedShape, name + ": node shape without sh:targetClass");
        }
        if (targets.size() > 1) {
            throw Error(ErrorCode::MalformedShape, name + ": more than one sh:targetClass");
        }
        if (!targets.front().is_iri()) {
            throw Error(ErrorCode::MalformedShape, name + ": sh:targetClass is not an IRI");
        }
        Shape shape;
        shape.target_class = targets.front().value();
        for (const Term& pnode : objects_of(shapes_graph, node, sh::kProperty)) {
            shape.constraints.push_back(
                read_property_shape(shapes_graph, pnode, name, out.warnings));
        }
        if (shape.constraints.empty()) {
            throw Error(ErrorCode::MalformedShape, name + ": shape without property constraints");
        }
        out.shapes.push_back(std::move(shape));
    }
    std::sort(out.shapes.begin(), out.shapes.end(),
              [](const Shape& a, const Shape& b) { return a.target_class < b.target_class; });
    return out;
}

namespace {

void check_focus(const Graph& data, const Term& focus, const Shape& shape,
                 std::vector<ValidationResult>& results) {
    std::string focus_name = focus.is_blank() ? "_:" + focus.value() : focus.value();
    for (const PropertyConstraint& c : shape.constraints) {
        auto values = objects_of(data, focus, c.path.c_str());

        if (values.size() < c.min_count) {
            results.push_back({focus_name, c.path, "minCount",
                               "expected at least " + std::to_string(c.min_count) +
                                   " value(s), found " + std::to_string(values.size()),
                               c.severity});
        }
        if (c.max_count && values.size() > *c.max_count) {
            results.push_back({focus_name, c.path, "maxCount",
                               "expected at most " + std::to_string(*c.max_count) +
                                   " value(s), found " + std::to_string(values.size()),
                               c.severity});
        }
        for (const Term& v : values) {
            if (c.datatype) {
                if (!v.is_literal() || v.datatype() != *c.datatype) {
                    results.push_back({focus_name, c.path, "datatype",
                                       "value " + rdf::render_term_nt(v) + " is not a literal of <" +
                                           *c.datatype + ">",
                                       c.severity});
                }
            }
            if (c.value_class) {
                bool ok = !v.is_literal() &&
                          data.contains(Triple(v, Term::iri(vocab::rdf::kType),
                                               Term::iri(*c.value_class)));
                if (!ok) {
                    results.push_back({focus_name, c.path, "class",
                                       "value " + rdf::render_term_nt(v) + " lacks rdf:type <" +
                                           *c.value_class + ">",
                                       c.severity});
                }
            }
            if (c.node_kind == NodeKind::IriOnly && !v.is_iri()) {
                results.push_back({focus_name, c.path, "nodeKind",
                                   "value " + rdf::render_term_nt(v) + " is not an IRI", c.severity});
            }
            if (c.node_kind == NodeKind::LiteralOnly && !v.is_literal()) {
                results.push_back({focus_name, c.path, "nodeKind",
                                   "value " + rdf::render_term_nt(v) + " is not a literal",
                                   c.severity});
            }
        }
    }
}

ValidationReport finish_report(std::vector<ValidationResult> results) {
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
        return std::tie(a.focus_node, a.path, a.constraint_kind, a.message) <
               std::tie(b.focus_node, b.path, b.constraint_kind, b.message);
    });
    ValidationReport report;
    report.conforms = std::none_of(results.begin(), results.end(), [](const auto& r) {
        return r.severity == Severity::Violation;
    });
    report.results = std::move(results);
    return report;
}

void validate_shape(const Graph& data, const Shape& shape,
                    std::vector<ValidationResult>& results) {
    for (const auto& t : data.match(
             {Variable{"x"}, Term::iri(vocab::rdf::kType), Term::iri(shape.target_class)})) {
        check_focus(data, t.subject, shape, results);
    }
}

}  // namespace

ValidationReport validate(const Graph& data, const ShapeSet& shapes) {
    std::vector<ValidationResult> results;
    for (const Shape& shape : shapes.shapes) validate_shape(data, shape, results);
    return finish_report(std::move(results));
}

ValidationReport validate_single_class(const Graph& data, const ShapeSet& shapes,
                                       const std::string& class_iri) {
    const Shape* shape = shapes.find(class_iri);
    if (!shape) {
        throw Error(ErrorCode::UnknownShapeTarget,
                    "no shape targets class <" + class_iri + ">");
    }
    std::vector<ValidationResult> results;
    validate_shape(data, *shape, results);
    return finish_report(std::move(results));
}

std::string ValidationReport::render() const {
    std::ostringstream out;
    out << "conforms: " << (conforms ? "true" : "false") << "\n";
    for (const auto& r : results) {
        out << (r.severity == Severity::Violation ? "V" : "W") << " " << r.focus_node << " "
            << r.path << " " << r.constraint_kind << " " << r.message << "\n";
    }
    return out.str();
}

std::string shape_as_interface_contract(const ShapeSet& shapes, const std::string& class_iri) {
    const Shape* shape = shapes.find(class_iri);
    if (!shape) {
        throw Error(ErrorCode::UnknownShapeTarget,
                    "no shape targets class <" + class_iri + ">");
    }
    std::vector<const PropertyConstraint*> ordered;
    for (const auto& c : shape->constraints) ordered.push_back(&c);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return a->path < b->path; });

    std::ostringstream out;
    out << "interface contract for <" << class_iri << ">\n";
    for (const auto* c : ordered) {
        out << "  <" << c->path << "> [" << c->min_count << "..";
        if (c->max_count) out << *c->max_count;
        else out << "*";
        out << "]";
        if (c->datatype) out << " datatype <" << *c->datatype << ">";
        if (c->value_class) out << " class <" << *c->value_class << ">";
        if (c->node_kind == NodeKind::IriOnly) out << " nodeKind IRI";
        if (c->node_kind == NodeKind::LiteralOnly) out << " nodeKind Literal";
        if (c->severity == Severity::Warning) out << " (warning)";
        out << "\n";
    }
    return out.str();
}

}  // namespace saas::shacl
