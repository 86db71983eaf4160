#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace saas::aas {

enum class IdType { Uri, Irdi, Custom };
enum class IdScope { Global, Local };
enum class Kind { Instance, Type };

IdType id_type_from_string(std::string_view s);
const char* to_string(IdType t);
const char* to_string(Kind k);

struct Identifier {
    std::string value;
    IdType id_type = IdType::Custom;
    IdScope scope = IdScope::Global;

    friend bool operator==(const Identifier&, const Identifier&) = default;
};

struct Key {
    std::string key_type;  // "Asset", "Submodel", ...
    bool local = false;
    IdType id_type = IdType::Custom;
    std::string value;
};

struct Reference {
    std::vector<Key> keys;  // document order; last key denotes the target

    const Key& target() const { return keys.back(); }
};

// (language tag, text); tag may be empty for untagged descriptions.
using LangText = std::pair<std::string, std::string>;

struct PropertyElement;
struct Collection;
struct FileElement;
struct BlobElement;
struct ReferenceElement;
struct OperationElement;

using SubmodelElement =
    std::variant<PropertyElement, Collection, FileElement, BlobElement, ReferenceElement,
                 OperationElement>;

struct PropertyElement {
    std::string id_short;
    std::optional<Reference> semantic_id;
    std::optional<std::string> value;
    std::optional<std::string> value_type;
};

struct Collection {
    std::string id_short;
    std::vector<SubmodelElement> children;
};

struct FileElement {
    std::string id_short;
    std::optional<Reference> semantic_id;
    std::string mime_type;
    std::string path;
};

struct BlobElement {
    std::string id_short;
    std::string mime_type;
    std::string payload;  // raw bytes or an external reference string
};

struct ReferenceElement {
    std::string id_short;
    std::optional<Reference> semantic_id;
    Reference target;
};

struct OperationElement {
    std::string id_short;
    std::vector<std::string> in_params;
    std::vector<std::string> out_params;
};

const std::string& element_id_short(const SubmodelElement& el);

struct AdministrationShell {
    Identifier identification;
    std::string id_short;
    std::vector<LangText> descriptions;
    std::vector<Reference> asset_refs;
    std::vector<Reference> submodel_refs;
    std::map<std::string, std::string> extras;  // unknown children, preserved
};

struct Asset {
    Identifier identification;
    std::string id_short;
    std::vector<LangText> descriptions;
    Kind kind = Kind::Instance;
    std::map<std::string, std::string> extras;
};

struct Submodel {
    Identifier identification;
    std::string id_short;
    std::vector<LangText> descriptions;
    Kind kind = Kind::Instance;
    std::vector<SubmodelElement> elements;
    std::map<std::string, std::string> extras;
};

struct ConceptDescription {
    Identifier identification;
    std::string id_short;
    std::vector<LangText> definitions;
    // preferred name, unit, data type, symbol, ... in document order of first
    // appearance; duplicates keep the first value.
    std::vector<std::pair<std::string, std::string>> attributes;
    std::map<std::string, std::string> extras;
};

struct AasEnvironment {
    std::vector<AdministrationShell> shells;
    std::vector<Asset> assets;
    std::vector<Submodel> submodels;
    std::vector<ConceptDescription> concept_descriptions;
};

struct Census {
    std::uint64_t shells = 0;
    std::uint64_t assets = 0;
    std::uint64_t submodels = 0;
    std::uint64_t elements = 0;  // recursive; collections count as elements
    std::uint64_t concept_descriptions = 0;

    std::uint64_t total() const {
        return shells + assets + submodels + elements + concept_descriptions;
    }
    friend bool operator==(const Census&, const Census&) = default;
};

Census environment_census(const AasEnvironment& env);

using ResolvedEntity = std::variant<const AdministrationShell*, const Asset*, const Submodel*,
                                    const ConceptDescription*>;

// Looks up the entity whose identification matches the reference's last key.
// Returns nullopt when absent; throws Error(AmbiguousReference) when two
// entities of the keyed type share the identifier.
std::optional<ResolvedEntity> resolve_local(const AasEnvironment& env, const Reference& ref);

}  // namespace saas::aas
