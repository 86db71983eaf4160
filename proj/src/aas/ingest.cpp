#include "aas/ingest.hpp"

#include <cctype>

#include "support/error.hpp"
#include "zip/reader.hpp"

namespace saas::aas {

namespace {

using xml::Element;

[[noreturn]] void schema_violation(const std::string& path, const std::string& reason) {
    throw Error(ErrorCode::SchemaViolation, path + ": " + reason);
}

// Text content of a value-bearing node; mixed content is rejected.
std::string value_text(const Element& el, const std::string& path) {
    if (el.mixed) schema_violation(path + "/" + el.local, "mixed content in value node");
    return el.text;
}

Identifier read_identification(const Element& parent, const std::string& path) {
    const Element* id = parent.find("identification");
    if (!id) schema_violation(path, "missing <identification>");
    Identifier out;
    out.value = value_text(*id, path);
    if (out.value.empty()) schema_violation(path + "/identification", "empty identifier value");
    out.id_type = id_type_from_string(id->attr("idType"));
    std::string local = id->attr("local");
    out.scope = local == "true" ? IdScope::Local : IdScope::Global;
    return out;
}

std::vector<LangText> read_lang_texts(const Element& container, const std::string& path) {
    std::vector<LangText> out;
    bool any_child = false;
    for (const Element& c : container.children) {
        if (c.local == "langString") {
            any_child = true;
            out.emplace_back(c.attr("lang"), value_text(c, path));
        }
    }
    if (!any_child && !container.text.empty()) {
        out.emplace_back(container.attr("lang"), container.text);
    }
    return out;
}

std::vector<LangText> read_descriptions(const Element& parent, const char* name,
                                        const std::string& path) {
    std::vector<LangText> out;
    for (const Element* d : parent.find_all(name)) {
        for (auto& lt : read_lang_texts(*d, path)) out.push_back(std::move(lt));
    }
    return out;
}

Reference read_reference(const Element& el, const std::string& path) {
    Reference ref;
    const Element* keys = el.find("keys");
    const Element& holder = keys ? *keys : el;
    for (const Element* k : holder.find_all("key")) {
        Key key;
        key.key_type = k->attr("type");
        key.local = k->attr("local") == "true";
        key.id_type = id_type_from_string(k->attr("idType"));
        key.value = value_text(*k, path);
        if (key.key_type.empty()) schema_violation(path + "/key", "missing type attribute");
        if (key.value.empty()) schema_violation(path + "/key", "empty key value");
        ref.keys.push_back(std::move(key));
    }
    if (ref.keys.empty()) schema_violation(path, "reference without keys");
    return ref;
}

Kind read_kind(const Element& parent, const std::string& path, bool mandatory) {
    auto kinds = parent.find_all("kind");
    if (kinds.empty()) {
        if (mandatory) schema_violation(path, "missing <kind>");
        return Kind::Instance;
    }
    if (kinds.size() > 1) schema_violation(path, "more than one <kind>");
    std::string v = value_text(*kinds[0], path);
    if (v == "Instance" || v == "instance") return Kind::Instance;
    if (v == "Type" || v == "type") return Kind::Type;
    schema_violation(path + "/kind", "unknown kind '" + v + "'");
}

// Child elements whose local names the caller did not consume, preserved as
// an opaque bag for forward compatibility.
std::map<std::string, std::string> collect_extras(const Element& el,
                                                  std::initializer_list<std::string_view> known) {
    std::map<std::string, std::string> extras;
    for (const Element& c : el.children) {
        bool is_known = false;
        for (auto k : known) {
            if (c.local == k) {
                is_known = true;
                break;
            }
        }
        if (!is_known) extras.try_emplace(c.local, c.text);
    }
    return extras;
}

std::optional<Reference> read_semantic_id(const Element& el, const std::string& path) {
    const Element* sid = el.find("semanticId");
    if (!sid) return std::nullopt;
    return read_reference(*sid, path + "/semanticId");
}

std::vector<SubmodelElement> read_elements(const Element& container, const std::string& path);

SubmodelElement read_typed_element(const Element& el, const std::string& path) {
    std::string id_short = el.find("idShort") ? el.find("idShort")->text : "";
    std::string epath = path + "/" + el.local + (id_short.empty() ? "" : ":" + id_short);

    if (el.local == "property") {
        PropertyElement p;
        p.id_short = id_short;
        p.semantic_id = read_semantic_id(el, epath);
        if (const Element* v = el.find("value")) p.value = value_text(*v, epath);
        if (const Element* vt = el.find("valueType")) {
            // AAS v2 nests valueType/dataObjectType/name; accept plain text too.
            if (const Element* dot = vt->find("dataObjectType")) {
                if (const Element* name = dot->find("name")) {
                    p.value_type = name->text;
                }
            } else {
                p.value_type = value_text(*vt, epath);
            }
        }
        return p;
    }
    if (el.local == "submodelElementCollection" || el.local == "collection") {
        Collection c;
        c.id_short = id_short;
        const Element* holder = el.find("value");
        c.children = read_elements(holder ? *holder : el, epath);
        return c;
    }
    if (el.local == "file") {
        FileElement f;
        f.id_short = id_short;
        f.semantic_id = read_semantic_id(el, epath);
        if (const Element* m = el.find("mimeType")) f.mime_type = m->text;
        if (const Element* v = el.find("value")) f.path = value_text(*v, epath);
        else if (const Element* v2 = el.find("path")) f.path = value_text(*v2, epath);
        return f;
    }
    if (el.local == "blob") {
        BlobElement b;
        b.id_short = id_short;
        if (const Element* m = el.find("mimeType")) b.mime_type = m->text;
        if (const Element* v = el.find("value")) b.payload = v->text;
        return b;
    }
    if (el.local == "referenceElement") {
        ReferenceElement r;
        r.id_short = id_short;
        r.semantic_id = read_semantic_id(el, epath);
        const Element* v = el.find("value");
        if (!v) schema_violation(epath, "referenceElement without <value>");
        r.target = read_reference(*v, epath);
        return r;
    }
    if (el.local == "operation") {
        OperationElement o;
        o.id_short = id_short;
        auto read_params = [&](const char* tag, std::vector<std::string>& out) {
            for (const Element* pv : el.find_all(tag)) {
                for (const Element& var : pv->children) {
                    if (const Element* vids = var.find("idShort")) out.push_back(vids->text);
                    else if (!var.text.empty()) out.push_back(var.text);
                }
                if (pv->children.empty() && !pv->text.empty()) out.push_back(pv->text);
            }
        };
        read_params("inputVariable", o.in_params);
        read_params("outputVariable", o.out_params);
        return o;
    }
    schema_violation(epath, "unknown submodel element kind '" + el.local + "'");
}

std::vector<SubmodelElement> read_elements(const Element& container, const std::string& path) {
    std::vector<SubmodelElement> out;
    for (const Element& c : container.children) {
        if (c.local == "submodelElement") {
            // v1-style wrapper around the typed element
            for (const Element& inner : c.children) {
                out.push_back(read_typed_element(inner, path));
            }
        } else if (c.local == "idShort") {
            continue;
        } else {
            out.push_back(read_typed_element(c, path));
        }
    }
    return out;
}

AdministrationShell read_shell(const Element& el, const std::string& path) {
    AdministrationShell shell;
    shell.identification = read_identification(el, path);
    if (const Element* ids = el.find("idShort")) shell.id_short = ids->text;
    shell.descriptions = read_descriptions(el, "description", path);
    for (const Element* r : el.find_all("assetRef")) {
        shell.asset_refs.push_back(read_reference(*r, path + "/assetRef"));
    }
    if (const Element* refs = el.find("submodelRefs")) {
        for (const Element* r : refs->find_all("submodelRef")) {
            shell.submodel_refs.push_back(read_reference(*r, path + "/submodelRef"));
        }
    }
    for (const Element* r : el.find_all("submodelRef")) {
        shell.submodel_refs.push_back(read_reference(*r, path + "/submodelRef"));
    }
    shell.extras = collect_extras(
        el, {"identification", "idShort", "description", "assetRef", "submodelRefs",
             "submodelRef"});
    return shell;
}

Asset read_asset(const Element& el, const std::string& path) {
    Asset asset;
    asset.identification = read_identification(el, path);
    if (const Element* ids = el.find("idShort")) asset.id_short = ids->text;
    asset.descriptions = read_descriptions(el, "description", path);
    asset.kind = read_kind(el, path, /*mandatory=*/true);
    asset.extras = collect_extras(el, {"identification", "idShort", "description", "kind"});
    return asset;
}

Submodel read_submodel(const Element& el, const std::string& path) {
    Submodel sm;
    sm.identification = read_identification(el, path);
    if (const Element* ids = el.find("idShort")) sm.id_short = ids->text;
    sm.descriptions = read_descriptions(el, "description", path);
    sm.kind = read_kind(el, path, /*mandatory=*/false);
    if (const Element* els = el.find("submodelElements")) {
        sm.elements = read_elements(*els, path + "/submodelElements");
    }
    sm.extras = collect_extras(
        el, {"identification", "idShort", "description", "kind", "submodelElements"});
    return sm;
}

// Attribute-bag keys for concept descriptions: leaf descendants outside the
// structural children; langString leaves are keyed by their parent element.
void collect_cd_attributes(const Element& el,
                           std::vector<std::pair<std::string, std::string>>& bag) {
    for (const Element& c : el.children) {
        if (c.children.empty()) {
            if (c.text.empty()) continue;
            std::string key = c.local == "langString" ? el.local : c.local;
            bool seen = false;
            for (const auto& [k, v] : bag) {
                (void)v;
                if (k == key) {
                    seen = true;
                    break;
                }
            }
            if (!seen) bag.emplace_back(key, c.text);
        } else {
            collect_cd_attributes(c, bag);
        }
    }
}

ConceptDescription read_concept_description(const Element& el, const std::string& path) {
    ConceptDescription cd;
    cd.identification = read_identification(el, path);
    if (const Element* ids = el.find("idShort")) cd.id_short = ids->text;
    cd.definitions = read_descriptions(el, "description", path);
    for (auto& d : read_descriptions(el, "definition", path)) cd.definitions.push_back(std::move(d));

    for (const Element& c : el.children) {
        if (c.local == "identification" || c.local == "idShort" || c.local == "description" ||
            c.local == "definition") {
            continue;
        }
        collect_cd_attributes(c, cd.attributes);
    }
    return cd;
}

}  // namespace

AasEnvironment parse_environment(std::string_view doc) {
    Element root = xml::parse_document(doc);
    if (root.local != "aasenv") {
        throw Error(ErrorCode::SchemaViolation,
                    "/: root element is <" + root.local + ">, expected <aasenv>");
    }
    AasEnvironment env;
    if (const Element* shells = root.find("assetAdministrationShells")) {
        std::size_t i = 0;
        for (const Element* s : shells->find_all("assetAdministrationShell")) {
            env.shells.push_back(read_shell(
                *s, "/aasenv/assetAdministrationShells/assetAdministrationShell[" +
                        std::to_string(i++) + "]"));
        }
    }
    if (const Element* assets = root.find("assets")) {
        std::size_t i = 0;
        for (const Element* a : assets->find_all("asset")) {
            env.assets.push_back(
                read_asset(*a, "/aasenv/assets/asset[" + std::to_string(i++) + "]"));
        }
    }
    if (const Element* submodels = root.find("submodels")) {
        std::size_t i = 0;
        for (const Element* s : submodels->find_all("submodel")) {
            env.submodels.push_back(
                read_submodel(*s, "/aasenv/submodels/submodel[" + std::to_string(i++) + "]"));
        }
    }
    if (const Element* cds = root.find("conceptDescriptions")) {
        std::size_t i = 0;
        for (const Element* c : cds->find_all("conceptDescription")) {
            env.concept_descriptions.push_back(read_concept_description(
                *c, "/aasenv/conceptDescriptions/conceptDescription[" + std::to_string(i++) +
                        "]"));
        }
    }
    return env;
}

namespace {

// Root element local name via a light scan; enough for container sniffing.
std::string sniff_root_local_name(std::string_view doc) {
    std::size_t i = 0;
    while (i < doc.size()) {
        if (doc[i] != '<') {
            ++i;
            continue;
        }
        if (i + 1 < doc.size() && (doc[i + 1] == '?' || doc[i + 1] == '!')) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        std::string name;
        while (j < doc.size() && doc[j] != ' ' && doc[j] != '\t' && doc[j] != '\r' &&
               doc[j] != '\n' && doc[j] != '>' && doc[j] != '/') {
            name.push_back(doc[j++]);
        }
        std::size_t colon = name.rfind(':');
        return colon == std::string::npos ? name : name.substr(colon + 1);
    }
    return {};
}

}  // namespace

std::vector<AasxEntry> extract_aasx(std::string_view archive) {
    std::vector<AasxEntry> out;
    for (auto& entry : zip::read_archive(archive)) {
        if (!entry.name.ends_with(".xml")) continue;
        if (sniff_root_local_name(entry.bytes) != "aasenv") continue;
        out.push_back(AasxEntry{std::move(entry.name), std::move(entry.bytes)});
    }
    if (out.empty()) {
        throw Error(ErrorCode::NoEnvironmentFound, "archive contains no aasenv XML entry");
    }
    return out;
}

xml::Metrics xml_metrics(std::string_view doc) {
    return xml::metrics(xml::parse_document(doc));
}

AasEnvironment open_environment(std::string_view bytes) {
    // ZIP containers start with PK.
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == 'K') {
        auto entries = extract_aasx(bytes);
        return parse_environment(entries.front().bytes);
    }
    return parse_environment(bytes);
}

}  // namespace saas::aas
