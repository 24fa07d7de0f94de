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

#include "jpbib/junii2.hpp"

#include "jpbib/utf8.hpp"
#include "jpbib/xml.hpp"

namespace jpbib::oai {

namespace {

Language language_of(const xml::Element& element, const std::string& text) {
    if (const std::string* lang = element.attribute("lang"))
        return parse_language(*lang);
    return utf8::contains_japanese(text) ? Language::ja : Language::en;
}

std::optional<std::string> text_of(const xml::Element& root, std::string_view name) {
    const xml::Element* element = root.child(name);
    if (element == nullptr)
        return std::nullopt;
    std::string value = utf8::collapse_whitespace(element->text);
    if (value.empty())
        return std::nullopt;
    return value;
}

}  // namespace

std::string_view to_string(Language language) noexcept {
    switch (language) {
    case Language::ja: return "ja";
    case Language::en: return "en";
    case Language::other: return "other";
    }
    return "other";
}

Language parse_language(std::string_view tag) noexcept {
    const std::string lower = utf8::ascii_lower(utf8::trim(tag));
    if (lower == "ja" || lower == "jpn" || lower == "jp")
        return Language::ja;
    if (lower == "en" || lower == "eng")
        return Language::en;
    return Language::other;
}

const Title* HarvestedPublication::title_in(Language wanted) const {
    for (const Title& t : titles)
        if (t.language == wanted)
            return &t;
    return nullptr;
}

HarvestedPublication parse_junii2(std::string_view payload, std::string identifier) {
    const xml::Element root = xml::parse_document(payload);
    HarvestedPublication pub;
    pub.identifier = std::move(identifier);

    std::optional<std::string> pending_kanji;
    for (const xml::Element& element : root.children) {
        std::string text = utf8::collapse_whitespace(element.text);
        if (text.empty())
            continue;
        if (element.name == "title" || element.name == "alternative") {
            const Language language = language_of(element, text);
            pub.titles.push_back({std::move(text), language});
        } else if (element.name == "creator") {
            if (language_of(element, text) == Language::ja) {
                if (pending_kanji)
                    pub.creators.push_back({std::nullopt, std::move(pending_kanji)});
                pending_kanji = std::move(text);
            } else {
                pub.creators.push_back({std::move(text), std::move(pending_kanji)});
                pending_kanji.reset();
            }
        } else if (element.name == "contributor") {
            pub.contributors.push_back(std::move(text));
        } else if (element.name == "description") {
            pub.descriptions.push_back(std::move(text));
        }
    }
    if (pending_kanji)
        pub.creators.push_back({std::nullopt, std::move(pending_kanji)});

    if (pub.titles.empty())
        throw MalformedRecordError("junii2 record " + pub.identifier + " has no title");

    pub.publication_type = text_of(root, "NIItype").value_or("");
    pub.date = text_of(root, "dateofissued");
    if (!pub.date)
        pub.date = text_of(root, "date");
    pub.volume = text_of(root, "volume");
    pub.number = text_of(root, "issue");
    pub.journal = text_of(root, "jtitle");
    pub.source_url = text_of(root, "URI");
    if (!pub.source_url)
        pub.source_url = text_of(root, "fulltextURL");

    const auto first_page = text_of(root, "spage");
    const auto last_page = text_of(root, "epage");
    if (first_page && last_page)
        pub.pages = *first_page + "-" + *last_page;
    else if (first_page)
        pub.pages = *first_page;

    if (const auto language = text_of(root, "language"))
        pub.language = parse_language(*language);
    else
        pub.language = pub.title_in(Language::ja) != nullptr ? Language::ja : Language::en;
    return pub;
}

}  // namespace jpbib::oai
