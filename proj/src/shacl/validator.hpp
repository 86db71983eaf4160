#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdf/graph.hpp"

namespace saas::shacl {

enum class NodeKind { IriOnly, LiteralOnly, Any };
enum class Severity { Violation, Warning };

struct PropertyConstraint {
    std::string path;  // predicate IRI
    std::uint32_t min_count = 0;
    std::optional<std::uint32_t> max_count;  // nullopt = unbounded
    std::optional<std::string> datatype;
    std::optional<std::string> value_class;
    NodeKind node_kind = NodeKind::Any;
    Severity severity = Severity::Violation;
};

struct Shape {
    std::string target_class;
    std::vector<PropertyConstraint> constraints;  // document order
};

struct ShapeSet {
    std::vector<Shape> shapes;  // sorted by target class
    std::vector<std::string> warnings;

    const Shape* find(const std::string& class_iri) const;
};

struct ValidationResult {
    std::string focus_node;
    std::string path;
    std::string constraint_kind;  // minCount, maxCount, datatype, class, nodeKind
    std::string message;
    Severity severity = Severity::Violation;

    friend bool operator==(const ValidationResult&, const ValidationResult&) = default;
};

struct ValidationReport {
    bool conforms = true;  // true iff no Violation-severity results
    std::vector<ValidationResult> results;

    // "conforms: true|false" then one "V|W <focus> <path> <kind> <message>"
    // line per result.
    std::string render() const;
};

// Builds the shape set from a parsed shapes graph. Node shapes are subjects
// typed sh:NodeShape or carrying sh:targetClass / sh:property; a node shape
// without a target class or without constraints is malformed. Unrecognized
// constraint components produce warnings, not errors.
ShapeSet load_shapes(const rdf::Graph& shapes_graph);

// Checks every focus node carrying rdf:type of a shape's target class.
// Result ordering: focus node, then path, then kind, then message.
ValidationReport validate(const rdf::Graph& data, const ShapeSet& shapes);

// As validate but restricted to the shape targeting class_iri; throws
// Error(UnknownShapeTarget) when no shape targets it.
ValidationReport validate_single_class(const rdf::Graph& data, const ShapeSet& shapes,
                                       const std::string& class_iri);

// Deterministic text rendering of a class's required/optional properties,
// usable as an API contract description.
std::string shape_as_interface_contract(const ShapeSet& shapes, const std::string& class_iri);

}  // namespace saas::shacl
