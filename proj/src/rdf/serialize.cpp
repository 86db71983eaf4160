#include "rdf/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rdf/vocab.hpp"
#include "support/error.hpp"

namespace saas::rdf {

namespace {

std::string escape_literal(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    static const char* kHex = "0123456789ABCDEF";
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    out += "\\u00";
                    out.push_back(kHex[c >> 4]);
                    out.push_back(kHex[c & 0x0f]);
                } else {
                    out.push_back(static_cast<char>(c));
                }
        }
    }
    return out;
}

// Conservative PN_LOCAL test for prefix compression: reject anything the
// Turtle parser would not read back verbatim.
bool is_safe_local(std::string_view local) {
    if (!local.empty() && (local.front() == '.' || local.back() == '.')) return false;
    for (char c : local) {
        if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_' && c != '-' &&
            c != '.') {
            return false;
        }
    }
    return true;
}

// Longest matching prefix from the table, or empty when none applies.
std::string compact_iri(const std::string& iri, const std::map<std::string, std::string>& prefixes,
                        std::set<std::string>* used) {
    std::string best_label;
    std::size_t best_len = 0;
    for (const auto& [label, ns] : prefixes) {
        if (ns.size() > best_len && iri.starts_with(ns) &&
            is_safe_local(std::string_view(iri).substr(ns.size()))) {
            best_label = label;
            best_len = ns.size();
        }
    }
    if (best_len == 0) return {};
    if (used) used->insert(best_label);
    return best_label + ":" + iri.substr(best_len);
}

std::string serialize_ntriples(const Graph& g) {
    std::vector<std::string> lines;
    lines.reserve(g.size());
    for (const Triple* t : g.triples()) {
        lines.push_back(render_term_nt(t->subject) + " " + render_term_nt(t->predicate) + " " +
                        render_term_nt(t->object) + " .\n");
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l;
    return out;
}

struct SubjectBlock {
    // predicate IRI -> sorted object renderings; rdf:type listed first.
    std::map<std::string, std::set<std::string>> by_predicate;
};

std::string render_term_turtle(const Term& t, const std::map<std::string, std::string>& prefixes,
                               std::set<std::string>* used) {
    switch (t.kind()) {
        case TermKind::Blank:
            return "_:" + t.value();
        case TermKind::Iri: {
            if (t.value() == vocab::rdf::kType) return "a";
            std::string compact = compact_iri(t.value(), prefixes, used);
            return compact.empty() ? "<" + t.value() + ">" : compact;
        }
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(t.value()) + "\"";
            if (!t.language().empty()) {
                out += "@" + t.language();
            } else if (t.datatype() != vocab::xsd::kString) {
                std::string dt = compact_iri(t.datatype(), prefixes, used);
                out += "^^" + (dt.empty() ? "<" + t.datatype() + ">" : dt);
            }
            return out;
        }
    }
    return {};
}

std::string serialize_turtle(const Graph& g) {
    const auto& prefixes = g.prefixes();
    std::set<std::string> used;

    // subject key: IRIs sort before blanks.
    std::map<std::string, std::pair<Term, SubjectBlock>> subjects;
    for (const Triple* t : g.triples()) {
        std::string key = (t->subject.is_blank() ? "~" : "") + t->subject.value();
        auto [it, fresh] = subjects.try_emplace(key, std::make_pair(t->subject, SubjectBlock{}));
        (void)fresh;
        it->second.second.by_predicate[t->predicate.value()].insert(
            render_term_turtle(t->object, prefixes, &used));
    }

    std::ostringstream body;
    for (auto& [key, entry] : subjects) {
        (void)key;
        const Term& subj = entry.first;
        SubjectBlock& block = entry.second;
        std::string subj_text = subj.is_blank()
                                    ? "_:" + subj.value()
                                    : render_term_turtle(subj, prefixes, &used);
        if (subj_text == "a") subj_text = "<" + subj.value() + ">";

        // rdf:type first, as "a".
        std::vector<std::pair<std::string, const std::set<std::string>*>> preds;
        auto type_it = block.by_predicate.find(vocab::rdf::kType);
        if (type_it != block.by_predicate.end()) preds.emplace_back("a", &type_it->second);
        for (const auto& [piri, objs] : block.by_predicate) {
            if (piri == vocab::rdf::kType) continue;
            std::string ptext = compact_iri(piri, prefixes, &used);
            preds.emplace_back(ptext.empty() ? "<" + piri + ">" : ptext, &objs);
        }

        body << subj_text;
        for (std::size_t i = 0; i < preds.size(); ++i) {
            std::string objects;
            for (const auto& o : *preds[i].second) {
                if (!objects.empty()) objects += ", ";
                objects += o;
            }
            body << (i == 0 ? " " : "  ") << preds[i].first << " " << objects;
            body << (i + 1 == preds.size() ? " .\n" : ";\n");
        }
    }

    std::ostringstream out;
    for (const auto& label : used) {
        out << "@prefix " << label << ": <" << prefixes.at(label) << "> .\n";
    }
    if (!used.empty() && !subjects.empty()) out << "\n";
    out << body.str();
    return out.str();
}

std::string escape_xml(std::string_view s, bool attribute) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"':
                out += attribute ? "&quot;" : "\"";
                break;
            default:
                if (c < 0x20 && c != '\t' && c != '\n' && c != '\r') {
                    throw Error(ErrorCode::Unserializable,
                                "control character not representable in XML");
                }
                out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

bool is_ncname(std::string_view s) {
    if (s.empty()) return false;
    unsigned char first = static_cast<unsigned char>(s[0]);
    if (std::isalpha(first) == 0 && s[0] != '_') return false;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_' && c != '-' &&
            c != '.') {
            return false;
        }
    }
    return true;
}

// Splits an IRI into namespace + NCName local part at the last '#' or '/'.
std::pair<std::string, std::string> split_for_xml(const std::string& iri) {
    std::size_t pos = iri.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 >= iri.size()) {
        throw Error(ErrorCode::Unserializable, "cannot derive an XML name from <" + iri + ">");
    }
    std::string local = iri.substr(pos + 1);
    if (!is_ncname(local)) {
        throw Error(ErrorCode::Unserializable, "IRI local part is not an XML name: <" + iri + ">");
    }
    return {iri.substr(0, pos + 1), local};
}

std::string serialize_rdfxml(const Graph& g) {
    // Namespaces are declared once on the root element; predicates outside the
    // prefix table get generated ns labels.
    std::map<std::string, std::string> ns_to_prefix;
    ns_to_prefix[vocab::kRdfNs] = "rdf";
    for (const auto& [label, ns] : g.prefixes()) {
        if (label == "rdf") continue;
        ns_to_prefix.try_emplace(ns, label);
    }

    struct PredObj {
        std::string pred_iri;
        Term object;
        bool operator<(const PredObj& other) const {
            if (pred_iri != other.pred_iri) return pred_iri < other.pred_iri;
            return object < other.object;
        }
    };
    std::map<std::string, std::pair<Term, std::set<PredObj>>> subjects;
    int generated = 0;
    for (const Triple* t : g.triples()) {
        auto [ns, local] = split_for_xml(t->predicate.value());
        (void)local;
        if (!ns_to_prefix.contains(ns)) {
            ns_to_prefix[ns] = "ns" + std::to_string(++generated);
        }
        std::string key = (t->subject.is_blank() ? "~" : "") + t->subject.value();
        auto [it, fresh] = subjects.try_emplace(key, std::make_pair(t->subject, std::set<PredObj>{}));
        (void)fresh;
        it->second.second.insert(PredObj{t->predicate.value(), t->object});
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rdf:RDF";
    std::map<std::string, std::string> prefix_to_ns;
    for (const auto& [ns, prefix] : ns_to_prefix) prefix_to_ns[prefix] = ns;
    for (const auto& [prefix, ns] : prefix_to_ns) {
        out << "\n    xmlns:" << prefix << "=\"" << escape_xml(ns, true) << "\"";
    }
    out << ">\n";

    for (const auto& [key, entry] : subjects) {
        (void)key;
        const Term& subj = entry.first;
        out << "  <rdf:Description ";
        if (subj.is_blank()) {
            out << "rdf:nodeID=\"" << escape_xml(subj.value(), true) << "\"";
        } else {
            out << "rdf:about=\"" << escape_xml(subj.value(), true) << "\"";
        }
        out << ">\n";
        for (const auto& po : entry.second.second) {
            auto [ns, local] = split_for_xml(po.pred_iri);
            std::string qname = ns_to_prefix.at(ns) + ":" + local;
            const Term& o = po.object;
            if (o.is_iri()) {
                out << "    <" << qname << " rdf:resource=\"" << escape_xml(o.value(), true)
                    << "\"/>\n";
            } else if (o.is_blank()) {
                out << "    <" << qname << " rdf:nodeID=\"" << escape_xml(o.value(), true)
                    << "\"/>\n";
            } else {
                out << "    <" << qname;
                if (!o.language().empty()) {
                    out << " xml:lang=\"" << escape_xml(o.language(), true) << "\"";
                } else if (o.datatype() != vocab::xsd::kString) {
                    out << " rdf:datatype=\"" << escape_xml(o.datatype(), true) << "\"";
                }
                out << ">" << escape_xml(o.value(), false) << "</" << qname << ">\n";
            }
        }
        out << "  </rdf:Description>\n";
    }
    out << "</rdf:RDF>\n";
    return out.str();
}

std::string serialize_jsonld(const Graph& g) {
    using nlohmann::json;
    const auto& prefixes = g.prefixes();
    std::set<std::string> used;

    auto compact = [&](const std::string& iri) {
        std::string c = compact_iri(iri, prefixes, &used);
        return c.empty() ? iri : c;
    };

    // node map: @id -> node object
    std::map<std::string, json> nodes;
    for (const Triple* t : g.triples()) {
        std::string id =
            t->subject.is_blank() ? "_:" + t->subject.value() : compact(t->subject.value());
        json& node = nodes[id];
        node["@id"] = id;
        if (t->predicate.value() == vocab::rdf::kType && t->object.is_iri()) {
            node["@type"].push_back(compact(t->object.value()));
            continue;
        }
        std::string key = compact(t->predicate.value());
        const Term& o = t->object;
        json value;
        if (o.is_iri()) {
            value["@id"] = compact(o.value());
        } else if (o.is_blank()) {
            value["@id"] = "_:" + o.value();
        } else {
            value["@value"] = o.value();
            if (!o.language().empty()) {
                value["@language"] = o.language();
            } else if (o.datatype() != vocab::xsd::kString) {
                value["@type"] = compact(o.datatype());
            }
        }
        node[key].push_back(value);
    }

    json root;
    json graph_array = json::array();
    for (auto& [id, node] : nodes) {
        (void)id;
        for (auto& [key, val] : node.items()) {
            if (val.is_array()) {
                std::sort(val.begin(), val.end(),
                          [](const json& a, const json& b) { return a.dump() < b.dump(); });
            }
            (void)key;
        }
        graph_array.push_back(std::move(node));
    }
    json context;
    for (const auto& label : used) context[label] = prefixes.at(label);
    root["@context"] = std::move(context);
    root["@graph"] = std::move(graph_array);
    return root.dump() + "\n";
}

}  // namespace

std::string render_term_nt(const Term& t) {
    switch (t.kind()) {
        case TermKind::Iri:
            return "<" + t.value() + ">";
        case TermKind::Blank:
            return "_:" + t.value();
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(t.value()) + "\"";
            if (!t.language().empty()) {
                out += "@" + t.language();
            } else if (t.datatype() != vocab::xsd::kString) {
                out += "^^<" + t.datatype() + ">";
            }
            return out;
        }
    }
    return {};
}

Format format_from_name(std::string_view name) {
    if (!name.empty() && name.front() == '.') name.remove_prefix(1);
    if (name == "nt" || name == "ntriples") return Format::NTriples;
    if (name == "nq" || name == "nquads") return Format::NQuads;
    if (name == "ttl" || name == "turtle") return Format::Turtle;
    if (name == "rdfxml" || name == "rdf" || name == "xml") return Format::RdfXml;
    if (name == "jsonld" || name == "json-ld") return Format::JsonLd;
    throw Error(ErrorCode::InvalidArgument, "unknown RDF format '" + std::string(name) + "'");
}

const char* format_extension(Format fmt) {
    switch (fmt) {
        case Format::NTriples: return "nt";
        case Format::NQuads: return "nq";
        case Format::Turtle: return "ttl";
        case Format::RdfXml: return "rdf";
        case Format::JsonLd: return "jsonld";
    }
    return "";
}

std::string serialize(const Graph& g, Format fmt) {
    switch (fmt) {
        case Format::NTriples:
        case Format::NQuads:
            // Default graph only, so both formats coincide.
            return serialize_ntriples(g);
        case Format::Turtle:
            return serialize_turtle(g);
        case Format::RdfXml:
            return serialize_rdfxml(g);
        case Format::JsonLd:
            return serialize_jsonld(g);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown format");
}

}  // namespace saas::rdf
