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

// Thin layer over expat. Element and attribute names are reported without
// their namespace prefix. HTML named entities resolve through a bundled
// table, whatever DTD the document points at.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jpbib::xml {

using Attributes = std::vector<std::pair<std::string, std::string>>;

class SaxHandler {
public:
    virtual ~SaxHandler() = default;
    virtual void start_element(std::string_view name, const Attributes& attributes) = 0;
    virtual void end_element(std::string_view name) = 0;
    virtual void characters(std::string_view text) = 0;
};

/// Streams `input` through `handler` in fixed-size chunks; memory use does
/// not depend on the document size. Throws XmlParseError or IoError.
void parse_stream(std::istream& input, SaxHandler& handler, std::size_t chunk_size = 1 << 16);

struct Element {
    std::string name;
    Attributes attributes;
    std::string text;  // all character data below this element, in order
    std::vector<Element> children;
    std::size_t begin = 0;  // byte range of the element in the source
    std::size_t end = 0;

    const std::string* attribute(std::string_view key) const;
    const Element* child(std::string_view child_name) const;
    std::vector<const Element*> children_named(std::string_view child_name) const;
};

/// Parses a small document into a tree. Throws XmlParseError.
Element parse_document(std::string_view document);

/// Escapes &, < and > (and " when `attribute` is set).
std::string escape(std::string_view text, bool attribute = false);

}  // namespace jpbib::xml
