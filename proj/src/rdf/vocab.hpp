#pragma once

// Well-known namespace IRIs and the handful of terms the toolchain relies on.

namespace saas::vocab {

inline constexpr const char* kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr const char* kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* kSkosNs = "http://www.w3.org/2004/02/skos/core#";
inline constexpr const char* kShaclNs = "http://www.w3.org/ns/shacl#";

// The rami namespace of the bundled ontology. fixtures/ontology/rami.ttl binds
// the same IRI; tests assert the two stay in sync.
inline constexpr const char* kRamiNs = "https://w3id.org/i40/rami#";

namespace rdf {
inline constexpr const char* kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr const char* kLangString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace rdf

namespace rdfs {
inline constexpr const char* kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr const char* kComment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr const char* kSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
}  // namespace rdfs

namespace owl {
inline constexpr const char* kSameAs = "http://www.w3.org/2002/07/owl#sameAs";
inline constexpr const char* kClass = "http://www.w3.org/2002/07/owl#Class";
}  // namespace owl

namespace xsd {
inline constexpr const char* kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr const char* kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr const char* kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr const char* kDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr const char* kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr const char* kDate = "http://www.w3.org/2001/XMLSchema#date";
}  // namespace xsd

namespace skos {
inline constexpr const char* kNote = "http://www.w3.org/2004/02/skos/core#note";
}  // namespace skos

namespace rami {
inline constexpr const char* kAssetShell = "https://w3id.org/i40/rami#AssetShell";
inline constexpr const char* kAsset = "https://w3id.org/i40/rami#Asset";
inline constexpr const char* kSubmodel = "https://w3id.org/i40/rami#Submodel";
inline constexpr const char* kConceptDescription = "https://w3id.org/i40/rami#ConceptDescription";
inline constexpr const char* kHasAsset = "https://w3id.org/i40/rami#hasAsset";
inline constexpr const char* kHasSubmodel = "https://w3id.org/i40/rami#hasSubmodel";
inline constexpr const char* kKind = "https://w3id.org/i40/rami#kind";
}  // namespace rami

namespace sh {
inline constexpr const char* kNodeShape = "http://www.w3.org/ns/shacl#NodeShape";
inline constexpr const char* kTargetClass = "http://www.w3.org/ns/shacl#targetClass";
inline constexpr const char* kProperty = "http://www.w3.org/ns/shacl#property";
inline constexpr const char* kPath = "http://www.w3.org/ns/shacl#path";
inline constexpr const char* kMinCount = "http://www.w3.org/ns/shacl#minCount";
inline constexpr const char* kMaxCount = "http://www.w3.org/ns/shacl#maxCount";
inline constexpr const char* kDatatype = "http://www.w3.org/ns/shacl#datatype";
inline constexpr const char* kClass = "http://www.w3.org/ns/shacl#class";
inline constexpr const char* kNodeKind = "http://www.w3.org/ns/shacl#nodeKind";
inline constexpr const char* kSeverity = "http://www.w3.org/ns/shacl#severity";
inline constexpr const char* kIri = "http://www.w3.org/ns/shacl#IRI";
inline constexpr const char* kLiteral = "http://www.w3.org/ns/shacl#Literal";
inline constexpr const char* kViolation = "http://www.w3.org/ns/shacl#Violation";
inline constexpr const char* kWarning = "http://www.w3.org/ns/shacl#Warning";
}  // namespace sh

}  // namespace saas::vocab
