#include "map/mapper.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "rdf/term.hpp"
#include "rdf/vocab.hpp"
#include "support/error.hpp"

namespace saas::mapping {

using aas::IdType;
using rdf::Term;
using rdf::Triple;

namespace {

const char* kValueTypeTable[][2] = {
    {"int", "http://www.w3.org/2001/XMLSchema#integer"},
    {"string", "http://www.w3.org/2001/XMLSchema#string"},
    {"boolean", "http://www.w3.org/2001/XMLSchema#boolean"},
    {"double", "http://www.w3.org/2001/XMLSchema#double"},
    {"date", "http://www.w3.org/2001/XMLSchema#date"},
};

// Abstract superclass chains mirroring the bundled ontology: class ->
// direct abstract parents. Used only when emit_abstract_notes is set.
struct AbstractLink {
    const char* cls;
    const char* parent;
};
const AbstractLink kClassHierarchy[] = {
    {vocab::rami::kAssetShell, "https://w3id.org/i40/rami#Identifiable"},
    {vocab::rami::kAsset, "https://w3id.org/i40/rami#Identifiable"},
    {vocab::rami::kAsset, "https://w3id.org/i40/rami#HasKind"},
    {vocab::rami::kSubmodel, "https://w3id.org/i40/rami#Identifiable"},
    {vocab::rami::kSubmodel, "https://w3id.org/i40/rami#HasKind"},
    {vocab::rami::kConceptDescription, "https://w3id.org/i40/rami#Identifiable"},
    {"https://w3id.org/i40/rami#Identifiable", "https://w3id.org/i40/rami#Referable"},
};
const char* kAbstractClasses[] = {
    "https://w3id.org/i40/rami#Identifiable",
    "https://w3id.org/i40/rami#Referable",
    "https://w3id.org/i40/rami#HasKind",
};

rdf::Term typed_value_literal(const std::string& value,
                              const std::optional<std::string>& value_type,
                              MappingReport& report, const std::string& path) {
    if (!value_type || value_type->empty()) return Term::literal(value);
    std::string_view name = *value_type;
    if (name.starts_with("xs:")) name.remove_prefix(3);
    else if (name.starts_with("xsd:")) name.remove_prefix(4);
    for (const auto& row : kValueTypeTable) {
        if (name == row[0]) return Term::literal(value, row[1]);
    }
    report.warnings.push_back(path + ": unknown valueType '" + *value_type +
                              "', emitting plain string");
    return Term::literal(value);
}

void emit_descriptions(const Term& subject, const std::vector<aas::LangText>& texts,
                       std::vector<Triple>& out) {
    for (const auto& [lang, text] : texts) {
        Term literal = lang.empty() ? Term::literal(text) : Term::lang_literal(text, lang);
        out.emplace_back(subject, Term::iri(vocab::rdfs::kComment), literal);
    }
}

void emit_label(const Term& subject, const std::string& id_short, std::vector<Triple>& out) {
    if (!id_short.empty()) {
        out.emplace_back(subject, Term::iri(vocab::rdfs::kLabel), Term::literal(id_short));
    }
}

std::string element_path(const std::string& base, std::size_t index,
                         const std::string& id_short) {
    std::string p = base + "/elements[" + std::to_string(index) + "]";
    if (!id_short.empty()) p += ":" + id_short;
    return p;
}

// Resolves a reference's last key to an IRI under the policy.
std::optional<Term> resolve_reference(const aas::Reference& ref, const MappingConfig& cfg,
                                      std::string* skip_reason) {
    const aas::Key& key = ref.target();
    return resolve_identifier(key.value, key.id_type, cfg, skip_reason);
}

class SubmodelElementMapper {
public:
    SubmodelElementMapper(const Term& subject, const MappingConfig& cfg, MappingReport& report)
        : subject_(subject), cfg_(cfg), report_(report) {}

    void map_all(const std::vector<aas::SubmodelElement>& elements, const std::string& base,
                 std::vector<Triple>& out) {
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const auto& el = elements[i];
            std::string path = element_path(base, i, aas::element_id_short(el));
            std::visit([&](const auto& concrete) { map_one(concrete, path, out); }, el);
        }
    }

private:
    // Predicate IRI from a semanticId reference; records the skip itself.
    std::optional<Term> predicate_for(const std::optional<aas::Reference>& semantic_id,
                                      const std::string& path) {
        if (!semantic_id || semantic_id->keys.empty()) {
            report_.skipped_entities.push_back({path, "no semanticId for a global predicate"});
            return std::nullopt;
        }
        std::string reason;
        auto p = resolve_reference(*semantic_id, cfg_, &reason);
        if (!p) report_.skipped_entities.push_back({path, "semanticId: " + reason});
        return p;
    }

    void map_one(const aas::PropertyElement& prop, const std::string& path,
                 std::vector<Triple>& out) {
        auto predicate = predicate_for(prop.semantic_id, path);
        if (!predicate) return;
        if (!prop.value) {
            report_.skipped_entities.push_back({path, "property has no value"});
            return;
        }
        out.emplace_back(subject_, *predicate,
                         typed_value_literal(*prop.value, prop.value_type, report_, path));
        out.emplace_back(*predicate, Term::iri(vocab::rdf::kType),
                         Term::iri(vocab::rdf::kProperty));
    }

    void map_one(const aas::Collection& coll, const std::string& path,
                 std::vector<Triple>& out) {
        // Collections are flattened onto the submodel subject; the grouping
        // itself is not representable without n-ary constructs.
        report_.warnings.push_back(path + ": collection flattened onto " + subject_.value());
        map_all(coll.children, path, out);
    }

    void map_one(const aas::FileElement& file, const std::string& path,
                 std::vector<Triple>& out) {
        auto predicate = predicate_for(file.semantic_id, path);
        if (!predicate) return;
        std::string reason;
        auto object = resolve_identifier(file.path, IdType::Uri, cfg_, &reason);
        if (!object) {
            if (cfg_.policy == IdentifierPolicy::MintUnderBase) {
                object = Term::iri(cfg_.mint_base + rdf::percent_encode_local(file.path));
            } else {
                report_.skipped_entities.push_back({path, "file path is not an IRI: " + reason});
                return;
            }
        }
        out.emplace_back(subject_, *predicate, *object);
    }

    void map_one(const aas::BlobElement&, const std::string& path, std::vector<Triple>&) {
        report_.skipped_entities.push_back({path, "binary blob has no RDF representation"});
    }

    void map_one(const aas::ReferenceElement& ref, const std::string& path,
                 std::vector<Triple>& out) {
        auto predicate = predicate_for(ref.semantic_id, path);
        if (!predicate) return;
        if (ref.target.keys.empty()) {
            report_.skipped_entities.push_back({path, "reference element without keys"});
            return;
        }
        std::string reason;
        auto object = resolve_reference(ref.target, cfg_, &reason);
        if (!object) {
            report_.skipped_entities.push_back({path, "target: " + reason});
            return;
        }
        out.emplace_back(subject_, *predicate, *object);
    }

    void map_one(const aas::OperationElement&, const std::string& path, std::vector<Triple>&) {
        report_.skipped_entities.push_back({path, "operation invocation is not part of the data model"});
    }

    const Term& subject_;
    const MappingConfig& cfg_;
    MappingReport& report_;
};

}  // namespace

MappingConfig MappingConfig::strict() {
    MappingConfig cfg;
    cfg.rami_namespace = vocab::kRamiNs;
    cfg.policy = IdentifierPolicy::StrictSkip;
    return cfg;
}

MappingConfig MappingConfig::mint(std::string base) {
    if (!rdf::is_valid_iri(base) || (!base.ends_with('/') && !base.ends_with('#'))) {
        throw Error(ErrorCode::InvalidArgument,
                    "mint base must be an IRI ending in '/' or '#': '" + base + "'");
    }
    MappingConfig cfg;
    cfg.rami_namespace = vocab::kRamiNs;
    cfg.policy = IdentifierPolicy::MintUnderBase;
    cfg.mint_base = std::move(base);
    return cfg;
}

std::optional<Term> resolve_identifier(const std::string& value, IdType id_type,
                                       const MappingConfig& cfg, std::string* skip_reason) {
    if (id_type == IdType::Uri) {
        std::string reason = rdf::check_iri(value);
        if (reason.empty()) return Term::iri(value);
        if (cfg.policy == IdentifierPolicy::MintUnderBase) {
            return Term::iri(cfg.mint_base + rdf::percent_encode_local(value));
        }
        if (skip_reason) *skip_reason = "idType is URI but value is not a valid IRI (" + reason + ")";
        return std::nullopt;
    }
    if (cfg.policy == IdentifierPolicy::MintUnderBase) {
        return Term::iri(cfg.mint_base + rdf::percent_encode_local(value));
    }
    if (skip_reason) {
        *skip_reason = std::string(aas::to_string(id_type)) +
                       " identifier cannot be adopted under the strict policy";
    }
    return std::nullopt;
}

std::string attribute_local_name(std::string_view key) {
    std::string out;
    bool upper_next = false;
    for (char c : key) {
        if (std::isalnum(static_cast<unsigned char>(c)) == 0 &&
            static_cast<unsigned char>(c) < 0x80) {
            upper_next = !out.empty();
            continue;
        }
        if (upper_next) {
            out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            upper_next = false;
        } else {
            out.push_back(c);
        }
    }
    if (!out.empty() && std::isupper(static_cast<unsigned char>(out[0])) != 0) {
        out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
    }
    return rdf::percent_encode_local(out);
}

std::optional<std::vector<Triple>> map_shell(const aas::AdministrationShell& shell,
                                             const MappingConfig& cfg, MappingReport& report,
                                             const std::string& path) {
    std::string reason;
    auto subject = resolve_identifier(shell.identification.value, shell.identification.id_type,
                                      cfg, &reason);
    if (!subject) {
        report.skipped_entities.push_back({path, reason});
        return std::nullopt;
    }
    std::vector<Triple> out;
    out.emplace_back(*subject, Term::iri(vocab::rdf::kType), Term::iri(vocab::rami::kAssetShell));
    emit_label(*subject, shell.id_short, out);
    emit_descriptions(*subject, shell.descriptions, out);
    auto emit_refs = [&](const std::vector<aas::Reference>& refs, const char* predicate,
                         const char* what) {
        for (std::size_t i = 0; i < refs.size(); ++i) {
            std::string ref_reason;
            auto object = resolve_reference(refs[i], cfg, &ref_reason);
            if (object) {
                out.emplace_back(*subject, Term::iri(predicate), *object);
            } else {
                report.skipped_entities.push_back(
                    {path + "/" + what + "[" + std::to_string(i) + "]", ref_reason});
            }
        }
    };
    emit_refs(shell.asset_refs, vocab::rami::kHasAsset, "assetRef");
    emit_refs(shell.submodel_refs, vocab::rami::kHasSubmodel, "submodelRef");
    return out;
}

std::optional<std::vector<Triple>> map_asset(const aas::Asset& asset, const MappingConfig& cfg,
                                             MappingReport& report, const std::string& path) {
    std::string reason;
    auto subject = resolve_identifier(asset.identification.value, asset.identification.id_type,
                                      cfg, &reason);
    if (!subject) {
        report.skipped_entities.push_back({path, reason});
        return std::nullopt;
    }
    // The asset projection: type, label, comments, kind. Nothing else.
    std::vector<Triple> out;
    out.emplace_back(*subject, Term::iri(vocab::rdf::kType), Term::iri(vocab::rami::kAsset));
    emit_label(*subject, asset.id_short, out);
    emit_descriptions(*subject, asset.descriptions, out);
    out.emplace_back(*subject, Term::iri(vocab::rami::kKind),
                     Term::literal(aas::to_string(asset.kind)));
    return out;
}

std::optional<std::vector<Triple>> map_submodel(const aas::Submodel& sm, const MappingConfig& cfg,
                                                MappingReport& report, const std::string& path) {
    std::string reason;
    auto subject =
        resolve_identifier(sm.identification.value, sm.identification.id_type, cfg, &reason);
    if (!subject) {
        report.skipped_entities.push_back({path, reason});
        return std::nullopt;
    }
    std::vector<Triple> out;
    out.emplace_back(*subject, Term::iri(vocab::rdf::kType), Term::iri(vocab::rami::kSubmodel));
    emit_label(*subject, sm.id_short, out);
    emit_descriptions(*subject, sm.descriptions, out);
    out.emplace_back(*subject, Term::iri(vocab::rami::kKind),
                     Term::literal(aas::to_string(sm.kind)));
    SubmodelElementMapper mapper(*subject, cfg, report);
    mapper.map_all(sm.elements, path, out);
    return out;
}

std::optional<std::vector<Triple>> map_concept_description(const aas::ConceptDescription& cd,
                                                           const MappingConfig& cfg,
                                                           const rdf::Graph& already_emitted,
                                                           MappingReport& report,
                                                           const std::string& path) {
    std::string reason;
    auto subject =
        resolve_identifier(cd.identification.value, cd.identification.id_type, cfg, &reason);
    if (!subject) {
        report.skipped_entities.push_back({path, reason});
        return std::nullopt;
    }
    std::vector<Triple> raw;
    raw.emplace_back(*subject, Term::iri(vocab::rdf::kType),
                     Term::iri(vocab::rami::kConceptDescription));
    emit_label(*subject, cd.id_short, raw);
    emit_descriptions(*subject, cd.definitions, raw);
    for (const auto& [key, value] : cd.attributes) {
        std::string local = attribute_local_name(key);
        if (local.empty()) {
            report.warnings.push_back(path + ": attribute with empty name skipped");
            continue;
        }
        raw.emplace_back(*subject, Term::iri(cfg.rami_namespace + local), Term::literal(value));
    }
    // ConceptDescriptions repeat many attributes across an environment; repeats
    // collapse against what the graph already holds.
    std::vector<Triple> out;
    for (auto& t : raw) {
        if (already_emitted.contains(t)) {
            ++report.collapsed_duplicates;
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

MappingResult map_environment(const aas::AasEnvironment& env, const MappingConfig& cfg) {
    MappingResult result;
    rdf::Graph& g = result.graph;
    MappingReport& report = result.report;

    g.set_prefix("rami", cfg.rami_namespace);
    g.set_prefix("rdf", vocab::kRdfNs);
    g.set_prefix("rdfs", vocab::kRdfsNs);
    g.set_prefix("xsd", vocab::kXsdNs);

    auto insert_all = [&](const std::optional<std::vector<Triple>>& triples) {
        if (!triples) return;
        for (const Triple& t : *triples) {
            if (!g.insert(t)) ++report.collapsed_duplicates;
        }
    };

    for (std::size_t i = 0; i < env.shells.size(); ++i) {
        insert_all(map_shell(env.shells[i], cfg, report, "shells[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 0; i < env.assets.size(); ++i) {
        insert_all(map_asset(env.assets[i], cfg, report, "assets[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 0; i < env.submodels.size(); ++i) {
        insert_all(
            map_submodel(env.submodels[i], cfg, report, "submodels[" + std::to_string(i) + "]"));
    }
    for (std::size_t i = 0; i < env.concept_descriptions.size(); ++i) {
        auto triples = map_concept_description(env.concept_descriptions[i], cfg, g, report,
                                               "conceptDescriptions[" + std::to_string(i) + "]");
        insert_all(triples);
    }

    if (cfg.emit_abstract_notes) {
        g.set_prefix("skos", vocab::kSkosNs);
        // Close over the asserted classes' abstract ancestry.
        std::set<std::string> asserted;
        for (const auto& t : g.match({rdf::Variable{"s"}, Term::iri(vocab::rdf::kType),
                                      rdf::Variable{"c"}})) {
            if (t.object.is_iri() && t.object.value().starts_with(cfg.rami_namespace)) {
                asserted.insert(t.object.value());
            }
        }
        std::vector<std::string> worklist(asserted.begin(), asserted.end());
        while (!worklist.empty()) {
            std::string cls = std::move(worklist.back());
            worklist.pop_back();
            for (const auto& link : kClassHierarchy) {
                if (cls != link.cls) continue;
                g.insert(Triple(Term::iri(link.cls), Term::iri(vocab::rdfs::kSubClassOf),
                                Term::iri(link.parent)));
                if (asserted.insert(link.parent).second) worklist.push_back(link.parent);
            }
        }
        for (const char* abstract_cls : kAbstractClasses) {
            if (asserted.contains(abstract_cls)) {
                g.insert(Triple(Term::iri(abstract_cls), Term::iri(vocab::skos::kNote),
                                Term::literal("abstract")));
            }
        }
    }

    report.emitted_triples = g.size();
    return result;
}

std::string MappingReport::render() const {
    std::ostringstream out;
    out << "mapping report\n";
    out << "emitted_triples: " << emitted_triples << "\n";
    out << "collapsed_duplicates: " << collapsed_duplicates << "\n";
    out << "skips: " << skipped_entities.size() << "\n";
    for (const auto& s : skipped_entities) out << "SKIP " << s.path << " " << s.reason << "\n";
    out << "warnings: " << warnings.size() << "\n";
    for (const auto& w : warnings) out << "WARN " << w << "\n";
    return out.str();
}

}  // namespace saas::mapping
