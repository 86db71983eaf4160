#include "xml/dom.hpp"

#include <expat.h>

#include <cctype>
#include <limits>

#include "support/error.hpp"

namespace saas::xml {

namespace {

constexpr char kNsSep = '\n';

struct BuildState {
    XML_Parser parser = nullptr;
    Element root;
    std::vector<Element*> stack;
    bool done = false;
};

// expat reports "nsuri<sep>local" for qualified names, bare local otherwise.
std::pair<std::string, std::string> split_name(const char* name) {
    std::string_view n(name);
    std::size_t sep = n.find(kNsSep);
    if (sep == std::string_view::npos) return {"", std::string(n)};
    return {std::string(n.substr(0, sep)), std::string(n.substr(sep + 1))};
}

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
    auto* st = static_cast<BuildState*>(user);
    Element el;
    auto [ns, local] = split_name(name);
    el.ns = std::move(ns);
    el.local = std::move(local);
    el.line = static_cast<std::size_t>(XML_GetCurrentLineNumber(st->parser));
    for (int i = 0; attrs[i]; i += 2) {
        auto [ans, alocal] = split_name(attrs[i]);
        (void)ans;
        el.attributes.emplace_back(std::move(alocal), attrs[i + 1]);
    }
    if (st->stack.empty()) {
        st->root = std::move(el);
        st->stack.push_back(&st->root);
    } else {
        Element* parent = st->stack.back();
        parent->children.push_back(std::move(el));
        st->stack.push_back(&parent->children.back());
    }
}

void XMLCALL on_end(void* user, const XML_Char*) {
    auto* st = static_cast<BuildState*>(user);
    Element* el = st->stack.back();
    // trim surrounding whitespace from accumulated character data
    std::string& t = el->text;
    std::size_t b = t.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        t.clear();
    } else {
        std::size_t e = t.find_last_not_of(" \t\r\n");
        t = t.substr(b, e - b + 1);
    }
    if (!t.empty() && !el->children.empty()) el->mixed = true;
    st->stack.pop_back();
    if (st->stack.empty()) st->done = true;
}

void XMLCALL on_text(void* user, const XML_Char* s, int len) {
    auto* st = static_cast<BuildState*>(user);
    if (st->stack.empty()) return;
    st->stack.back()->text.append(s, static_cast<std::size_t>(len));
}

struct ParserGuard {
    XML_Parser p;
    explicit ParserGuard(XML_Parser parser) : p(parser) {}
    ~ParserGuard() { XML_ParserFree(p); }
};

}  // namespace

const Element* Element::find(std::string_view local_name) const {
    for (const Element& c : children) {
        if (c.local == local_name) return &c;
    }
    return nullptr;
}

std::vector<const Element*> Element::find_all(std::string_view local_name) const {
    std::vector<const Element*> out;
    for (const Element& c : children) {
        if (c.local == local_name) out.push_back(&c);
    }
    return out;
}

std::string Element::attr(std::string_view name) const {
    for (const auto& [k, v] : attributes) {
        if (k == name) return v;
    }
    return {};
}

Element parse_document(std::string_view bytes) {
    XML_Parser parser = XML_ParserCreateNS(nullptr, kNsSep);
    if (!parser) throw Error(ErrorCode::Internal, "failed to create XML parser");
    ParserGuard guard(parser);

    BuildState st;
    st.parser = parser;
    XML_SetUserData(parser, &st);
    XML_SetElementHandler(parser, on_start, on_end);
    XML_SetCharacterDataHandler(parser, on_text);

    if (bytes.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
        throw Error(ErrorCode::ResourceLimit, "XML document too large");
    }
    if (XML_Parse(parser, bytes.data(), static_cast<int>(bytes.size()), 1) == XML_STATUS_ERROR) {
        throw Error(ErrorCode::XmlSyntax,
                    "XML syntax error at " + std::to_string(XML_GetCurrentLineNumber(parser)) +
                        ":" + std::to_string(XML_GetCurrentColumnNumber(parser) + 1) + ": " +
                        XML_ErrorString(XML_GetErrorCode(parser)));
    }
    if (!st.done) throw Error(ErrorCode::XmlSyntax, "XML document has no root element");
    return std::move(st.root);
}

namespace {

void walk(const Element& el, Metrics& m) {
    ++m.node_count;
    if (el.children.empty()) {
        ++m.leaf_count;
    } else {
        for (const Element& c : el.children) walk(c, m);
    }
}

}  // namespace

Metrics metrics(const Element& root) {
    Metrics m;
    walk(root, m);
    return m;
}

}  // namespace saas::xml
