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

// junii2 metadata records as served by IRDB-style repositories. The element
// mapping is documented in docs/junii2-mapping.md.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jpbib/errors.hpp"

namespace jpbib::oai {

enum class Language { ja, en, other };

std::string_view to_string(Language language) noexcept;
Language parse_language(std::string_view tag) noexcept;

struct Title {
    std::string text;
    Language language = Language::other;

    friend bool operator==(const Title&, const Title&) = default;
};

/// One author. IRDB records list the kanji form of a name directly before
/// its Latin form; either may be missing.
struct Creator {
    std::optional<std::string> latin;
    std::optional<std::string> kanji;

    friend bool operator==(const Creator&, const Creator&) = default;
};

struct HarvestedPublication {
    std::string identifier;
    std::vector<Title> titles;
    std::vector<Creator> creators;
    std::string publication_type;
    std::optional<std::string> date;
    std::optional<std::string> pages;
    std::optional<std::string> volume;
    std::optional<std::string> number;
    Language language = Language::other;
    std::optional<std::string> source_url;
    std::optional<std::string> journal;
    std::vector<std::string> contributors;
    std::vector<std::string> descriptions;

    const Title* title_in(Language language) const;

    friend bool operator==(const HarvestedPublication&, const HarvestedPublication&) = default;
};

class MalformedRecordError : public Error {
public:
    using Error::Error;
};

/// Parses a junii2 metadata element. Throws MalformedRecordError when the
/// record has no title, XmlParseError when it is not XML.
HarvestedPublication parse_junii2(std::string_view payload, std::string identifier = {});

}  // namespace jpbib::oai
