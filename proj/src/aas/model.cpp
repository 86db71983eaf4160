#include "aas/model.hpp"

#include "support/error.hpp"

namespace saas::aas {

IdType id_type_from_string(std::string_view s) {
    if (s == "URI" || s == "IRI") return IdType::Uri;
    if (s == "IRDI") return IdType::Irdi;
    return IdType::Custom;
}

const char* to_string(IdType t) {
    switch (t) {
        case IdType::Uri: return "URI";
        case IdType::Irdi: return "IRDI";
        case IdType::Custom: return "Custom";
    }
    return "Custom";
}

const char* to_string(Kind k) { return k == Kind::Instance ? "Instance" : "Type"; }

const std::string& element_id_short(const SubmodelElement& el) {
    return std::visit([](const auto& e) -> const std::string& { return e.id_short; }, el);
}

namespace {

std::uint64_t count_elements(const std::vector<SubmodelElement>& elements) {
    std::uint64_t n = 0;
    for (const auto& el : elements) {
        ++n;  // the element itself, collections included
        if (const auto* coll = std::get_if<Collection>(&el)) {
            n += count_elements(coll->children);
        }
    }
    return n;
}

}  // namespace

Census environment_census(const AasEnvironment& env) {
    Census c;
    c.shells = env.shells.size();
    c.assets = env.assets.size();
    c.submodels = env.submodels.size();
    c.concept_descriptions = env.concept_descriptions.size();
    for (const auto& sm : env.submodels) c.elements += count_elements(sm.elements);
    return c;
}

std::optional<ResolvedEntity> resolve_local(const AasEnvironment& env, const Reference& ref) {
    if (ref.keys.empty()) {
        throw Error(ErrorCode::InvalidArgument, "reference has no keys");
    }
    const Key& key = ref.target();

    auto pick = [&](const auto& entities) -> std::optional<ResolvedEntity> {
        ResolvedEntity found;
        bool any = false;
        for (const auto& e : entities) {
            if (e.identification.value == key.value) {
                if (any) {
                    throw Error(ErrorCode::AmbiguousReference,
                                "two entities of type " + key.key_type + " share identifier '" +
                                    key.value + "'");
                }
                found = &e;
                any = true;
            }
        }
        if (!any) return std::nullopt;
        return found;
    };

    if (key.key_type == "Asset") return pick(env.assets);
    if (key.key_type == "Submodel") return pick(env.submodels);
    if (key.key_type == "ConceptDescription") return pick(env.concept_descriptions);
    if (key.key_type == "AssetAdministrationShell") return pick(env.shells);
    return std::nullopt;
}

}  // namespace saas::aas
