// Copyright 2026 The jpbib Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jpbib/xml.hpp"

#include <expat.h>

#include <istream>
#include <memory>

#include "jpbib/errors.hpp"
#include "jpbib/html_entities.hpp"

namespace jpbib::xml {

namespace {

std::string_view local_name(const XML_Char* name) {
    std::string_view n(name);
    const std::size_t colon = n.rfind(':');
    return colon == std::string_view::npos ? n : n.substr(colon + 1);
}

Attributes collect_attributes(const XML_Char** atts) {
    Attributes out;
    for (std::size_t i = 0; atts[i] != nullptr; i += 2)
        out.emplace_back(std::string(local_name(atts[i])), std::string(atts[i + 1]));
    return out;
}

int XMLCALL feed_entity_table(XML_Parser parser, const XML_Char* context, const XML_Char*, const XML_Char*,
                              const XML_Char*) {
    XML_Parser external = XML_ExternalEntityParserCreate(parser, context, nullptr);
    if (external == nullptr)
        return XML_STATUS_ERROR;
    const std::string& dtd = html_entity_dtd();
    const auto status = XML_Parse(external, dtd.data(), static_cast<int>(dtd.size()), XML_TRUE);
    XML_ParserFree(external);
    return status == XML_STATUS_ERROR ? XML_STATUS_ERROR : XML_STATUS_OK;
}

struct ParserDeleter {
    void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};
using ParserPtr = std::unique_ptr<XML_ParserStruct, ParserDeleter>;

ParserPtr make_parser(void* user_data) {
    ParserPtr parser(XML_ParserCreate(nullptr));
    if (!parser)
        throw Error("cannot allocate XML parser");
    XML_SetUserData(parser.get(), user_data);
    XML_SetParamEntityParsing(parser.get(), XML_PARAM_ENTITY_PARSING_ALWAYS);
    XML_UseForeignDTD(parser.get(), XML_TRUE);
    XML_SetExternalEntityRefHandler(parser.get(), feed_entity_table);
    return parser;
}

[[noreturn]] void throw_parse_error(XML_Parser parser) {
    throw XmlParseError(XML_ErrorString(XML_GetErrorCode(parser)),
                        static_cast<std::size_t>(XML_GetCurrentLineNumber(parser)),
                        static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser)));
}

struct TreeBuilder {
    XML_Parser parser = nullptr;
    Element root;
    std::vector<Element*> stack;
    bool has_root = false;
};

void XMLCALL tree_start(void* data, const XML_Char* name, const XML_Char** atts) {
    auto& b = *static_cast<TreeBuilder*>(data);
    Element element;
    element.name = local_name(name);
    element.attributes = collect_attributes(atts);
    element.begin = static_cast<std::size_t>(XML_GetCurrentByteIndex(b.parser));
    if (b.stack.empty()) {
        b.root = std::move(element);
        b.has_root = true;
        b.stack.push_back(&b.root);
    } else {
        auto& siblings = b.stack.back()->children;
        siblings.push_back(std::move(element));
        b.stack.push_back(&siblings.back());
    }
}

void XMLCALL tree_end(void* data, const XML_Char*) {
    auto& b = *static_cast<TreeBuilder*>(data);
    b.stack.back()->end =
        static_cast<std::size_t>(XML_GetCurrentByteIndex(b.parser) + XML_GetCurrentByteCount(b.parser));
    b.stack.pop_back();
}

void XMLCALL tree_text(void* data, const XML_Char* s, int len) {
    auto& b = *static_cast<TreeBuilder*>(data);
    for (Element* open : b.stack)
        open->text.append(s, static_cast<std::size_t>(len));
}

struct SaxBridge {
    SaxHandler* handler;
};

void XMLCALL sax_start(void* data, const XML_Char* name, const XML_Char** atts) {
    static_cast<SaxBridge*>(data)->handler->start_element(local_name(name), collect_attributes(atts));
}

void XMLCALL sax_end(void* data, const XML_Char* name) {
    static_cast<SaxBridge*>(data)->handler->end_element(local_name(name));
}

void XMLCALL sax_text(void* data, const XML_Char* s, int len) {
    static_cast<SaxBridge*>(data)->handler->characters(std::string_view(s, static_cast<std::size_t>(len)));
}

}  // namespace

void parse_stream(std::istream& input, SaxHandler& handler, std::size_t chunk_size) {
    SaxBridge bridge{&handler};
    ParserPtr parser = make_parser(&bridge);
    XML_SetElementHandler(parser.get(), sax_start, sax_end);
    XML_SetCharacterDataHandler(parser.get(), sax_text);

    std::vector<char> buffer(chunk_size);
    while (true) {
        input.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        const auto got = static_cast<int>(input.gcount());
        if (input.bad())
            throw IoError("read error while streaming XML");
        const bool last = got < static_cast<int>(buffer.size());
        if (XML_Parse(parser.get(), buffer.data(), got, last ? XML_TRUE : XML_FALSE) == XML_STATUS_ERROR)
            throw_parse_error(parser.get());
        if (last)
            break;
    }
}

Element parse_document(std::string_view document) {
    TreeBuilder builder;
    ParserPtr parser = make_parser(&builder);
    builder.parser = parser.get();
    XML_SetElementHandler(parser.get(), tree_start, tree_end);
    XML_SetCharacterDataHandler(parser.get(), tree_text);
    if (XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE) == XML_STATUS_ERROR)
        throw_parse_error(parser.get());
    return std::move(builder.root);
}

const std::string* Element::attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes)
        if (k == key)
            return &v;
    return nullptr;
}

const Element* Element::child(std::string_view child_name) const {
    for (const Element& c : children)
        if (c.name == child_name)
            return &c;
    return nullptr;
}

std::vector<const Element*> Element::children_named(std::string_view child_name) const {
    std::vector<const Element*> out;
    for (const Element& c : children)
        if (c.name == child_name)
            out.push_back(&c);
    return out;
}

std::string escape(std::string_view text, bool attribute) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"':
            if (attribute) {
                out += "&quot;";
                break;
            }
            [[fallthrough]];
        default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace jpbib::xml
